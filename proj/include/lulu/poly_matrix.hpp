#pragma once

#include <vector>

#include "lulu/polynomial.hpp"

namespace lulu {

/// Dense matrix with Polynomial entries, all sharing the same variable count.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
        : rows_(rows), cols_(cols), num_vars_(num_vars),
          entries_(rows * cols, Polynomial(num_vars))
    {
    }

    static PolyMatrix identity(std::size_t n, std::size_t num_vars)
    {
        PolyMatrix m(n, n, num_vars);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Polynomial::constant(num_vars, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_vars() const { return num_vars_; }

    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& other) const;
    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    bool operator==(const PolyMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    bool is_identity() const;
    bool is_unitriangular() const;   // upper or lower, diagonal identically 1

    /// Evaluate every entry at a rational point.
    std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& point) const;

private:
    std::size_t rows_ = 0, cols_ = 0, num_vars_ = 0;
    std::vector<Polynomial> entries_;
};

/// Exact inverse of a unitriangular matrix via the terminating Neumann series
/// sum_{l=0}^{size-1} (-1)^l (M - I)^l. Throws on non-unitriangular input.
PolyMatrix invert_unitriangular(const PolyMatrix& m);

/// Exact determinant of the square submatrix picked out by `rows` x `cols`.
/// Uses fraction-free Bareiss elimination for dense submatrices and memoized
/// Laplace expansion when many entries vanish; both routes are exact and are
/// cross-checked in the test suite.
Polynomial minor_det(const PolyMatrix& m,
                     const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

/// Determinant of a full square PolyMatrix.
Polynomial poly_det(const PolyMatrix& m);

/// The two underlying routes, exposed for cross-checking.
Polynomial det_bareiss(const PolyMatrix& m,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);
Polynomial det_laplace(const PolyMatrix& m,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);

} // namespace lulu
