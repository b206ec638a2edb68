#include "lulu/qmatrix.hpp"

#include <stdexcept>

namespace lulu {

QMatrix QMatrix::operator*(const QMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("QMatrix::operator*: shape mismatch");
    QMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QMatrix::operator+: shape mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QMatrix::operator-: shape mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] -= other.entries_[i];
    return r;
}

QMatrix QMatrix::operator*(const Rational& c) const
{
    QMatrix r = *this;
    for (auto& e : r.entries_)
        e *= c;
    return r;
}

QMatrix QMatrix::transpose() const
{
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

Rational QMatrix::det() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("QMatrix::det: matrix not square");
    QMatrix a = *this;
    Rational d = 1;
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t pivot = k;
        while (pivot < rows_ && a.at(pivot, k) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a.at(k, j), a.at(pivot, j));
            d = -d;
        }
        d *= a.at(k, k);
        Rational inv = Rational(1) / a.at(k, k);
        for (std::size_t i = k + 1; i < rows_; ++i) {
            Rational f = a.at(i, k) * inv;
            if (f == 0) continue;
            for (std::size_t j = k; j < cols_; ++j)
                a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("QMatrix::inverse: matrix not square");
    QMatrix a = *this;
    QMatrix inv = identity(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t pivot = k;
        while (pivot < rows_ && a.at(pivot, k) == 0) ++pivot;
        if (pivot == rows_)
            throw std::domain_error("QMatrix::inverse: singular matrix");
        if (pivot != k)
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a.at(k, j), a.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        Rational p = a.at(k, k);
        for (std::size_t j = 0; j < cols_; ++j) {
            a.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == k) continue;
            Rational f = a.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

Rational QMatrix::minor(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const
{
    if (rows.size() != cols.size())
        throw std::invalid_argument("QMatrix::minor: row/column count mismatch");
    QMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.at(i, j) = at(rows[i], cols[j]);
    return sub.det();
}

std::size_t QMatrix::rank() const
{
    QMatrix a = *this;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a.at(row, j), a.at(pivot, j));
        Rational inv = Rational(1) / a.at(row, col);
        for (std::size_t i = row + 1; i < rows_; ++i) {
            Rational f = a.at(i, col) * inv;
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

PolyMatrix QMatrix::to_poly(std::size_t num_vars) const
{
    PolyMatrix r(rows_, cols_, num_vars);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r.at(i, j) = Polynomial::constant(num_vars, at(i, j));
    return r;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b)
{
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("bracket: square matrices of matching size required");
    return a * b - b * a;
}

} // namespace lulu
