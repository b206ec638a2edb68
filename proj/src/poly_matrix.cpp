#include "lulu/poly_matrix.hpp"

#include <cstdint>
#include <unordered_map>

namespace lulu {

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const
{
    if (cols_ != other.rows_ || num_vars_ != other.num_vars_)
        throw std::invalid_argument("PolyMatrix::operator*: shape or variable mismatch");
    PolyMatrix r(rows_, other.cols_, num_vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Polynomial& bkj = other.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_ || num_vars_ != other.num_vars_)
        throw std::invalid_argument("PolyMatrix::operator+: shape or variable mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_ || num_vars_ != other.num_vars_)
        throw std::invalid_argument("PolyMatrix::operator-: shape or variable mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] -= other.entries_[i];
    return r;
}

bool PolyMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Polynomial& e = at(i, j);
            if (i == j) {
                if (!e.is_constant() || e.constant_term() != 1) return false;
            } else if (!e.is_zero()) {
                return false;
            }
        }
    return true;
}

bool PolyMatrix::is_unitriangular() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Polynomial& d = at(i, i);
        if (!d.is_constant() || d.constant_term() != 1) return false;
    }
    bool upper = true, lower = true;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i < j && !at(i, j).is_zero()) lower = false;
            if (i > j && !at(i, j).is_zero()) upper = false;
        }
    return upper || lower;
}

std::vector<std::vector<Rational>> PolyMatrix::evaluate(const std::vector<Rational>& point) const
{
    std::vector<std::vector<Rational>> r(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i][j] = at(i, j).evaluate(point);
    return r;
}

PolyMatrix invert_unitriangular(const PolyMatrix& m)
{
    if (!m.is_unitriangular())
        throw std::invalid_argument("invert_unitriangular: matrix is not unitriangular");
    const std::size_t n = m.rows();
    PolyMatrix nil = m - PolyMatrix::identity(n, m.num_vars());
    PolyMatrix result = PolyMatrix::identity(n, m.num_vars());
    PolyMatrix power = PolyMatrix::identity(n, m.num_vars());
    int sign = 1;
    for (std::size_t l = 1; l < n; ++l) {
        power = power * nil;
        sign = -sign;
        if (sign > 0)
            result = result + power;
        else
            result = result - power;
    }
    return result;
}

namespace {

void check_indices(const PolyMatrix& m,
                   const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols)
{
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor_det: row/column count mismatch");
    auto check = [](const std::vector<std::size_t>& idx, std::size_t bound) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound)
                throw std::out_of_range("minor_det: index out of range");
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] == idx[j])
                    throw std::invalid_argument("minor_det: repeated index");
        }
    };
    check(rows, m.rows());
    check(cols, m.cols());
}

} // namespace

Polynomial det_bareiss(const PolyMatrix& m,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols)
{
    check_indices(m, rows, cols);
    const std::size_t n = rows.size();
    if (n == 0) return Polynomial::constant(m.num_vars(), 1);
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(rows[i], cols[j]);

    int sign = 1;
    Polynomial prev = Polynomial::constant(m.num_vars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Polynomial(m.num_vars());
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Polynomial det_laplace(const PolyMatrix& m,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols)
{
    check_indices(m, rows, cols);
    const std::size_t n = rows.size();
    if (n == 0) return Polynomial::constant(m.num_vars(), 1);
    if (n > 32)
        throw std::invalid_argument("det_laplace: submatrix too large");

    // det over subsets of rows against the trailing columns; memoized so the
    // sub-determinants are shared across the expansion tree.
    std::unordered_map<std::uint64_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> const Polynomial& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t col = cols[n - k];   // expand along the first remaining column
        Polynomial d(m.num_vars());
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1ull << i))) continue;
            const Polynomial& entry = m.at(rows[i], col);
            if (!entry.is_zero()) {
                std::uint64_t sub = mask & ~(1ull << i);
                if (sub == 0) {
                    d += sign > 0 ? entry : -entry;
                } else {
                    const Polynomial& subdet = self(self, sub);
                    Polynomial prod = entry * subdet;
                    d += sign > 0 ? prod : -prod;
                }
            }
            sign = -sign;
        }
        return memo.emplace(mask, std::move(d)).first->second;
    };
    std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
    return rec(rec, full);
}

Polynomial minor_det(const PolyMatrix& m,
                     const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols)
{
    check_indices(m, rows, cols);
    const std::size_t n = rows.size();
    if (n == 0) return Polynomial::constant(m.num_vars(), 1);
    std::size_t zero = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.at(rows[i], cols[j]).is_zero()) ++zero;
    // many vanishing entries favor Laplace; otherwise fraction-free elimination
    if (n <= 3 || 3 * zero >= n * n)
        return det_laplace(m, rows, cols);
    return det_bareiss(m, rows, cols);
}

Polynomial poly_det(const PolyMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("poly_det: matrix not square");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_det(m, idx, idx);
}

} // namespace lulu
