#pragma once

#include <vector>

#include "lulu/poly_matrix.hpp"
#include "lulu/rational.hpp"

namespace lulu {

/// Dense rational matrix. Used for the constant Chevalley-basis matrices and
/// for exact linear algebra in the fiber computations.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0))
    {
    }

    static QMatrix identity(std::size_t n)
    {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static QMatrix unit(std::size_t n, std::size_t r, std::size_t c, const Rational& v = 1)
    {
        QMatrix m(n, n);
        m.at(r, c) = v;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix operator*(const Rational& c) const;
    bool operator==(const QMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    QMatrix transpose() const;
    bool is_zero() const;

    Rational det() const;
    QMatrix inverse() const;   // throws on singular input

    /// Determinant of the submatrix on the given rows x cols.
    Rational minor(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

    /// Rank over Q.
    std::size_t rank() const;

    /// Lift to a constant PolyMatrix in the given number of variables.
    PolyMatrix to_poly(std::size_t num_vars) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

/// Matrix commutator ab - ba.
QMatrix bracket(const QMatrix& a, const QMatrix& b);

} // namespace lulu
