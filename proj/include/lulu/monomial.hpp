#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lulu {

/// Exponent vector of a power product x_1^{m_1} ... x_D^{m_D}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps))
    {
        for (int e : exps_)
            if (e < 0)
                throw std::invalid_argument("Monomial: negative exponent");
    }

    std::size_t num_vars() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_one() const
    {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    bool squarefree() const
    {
        for (int e : exps_)
            if (e > 1) return false;
        return true;
    }

    bool divides(const Monomial& other) const
    {
        if (exps_.size() != other.exps_.size())
            throw std::invalid_argument("Monomial::divides: variable count mismatch");
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const
    {
        if (exps_.size() != other.exps_.size())
            throw std::invalid_argument("Monomial::operator*: variable count mismatch");
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] = exps_[i] + other.exps_[i];
        return r;
    }

    /// Exact quotient; requires other | this.
    Monomial operator/(const Monomial& other) const
    {
        if (!other.divides(*this))
            throw std::invalid_argument("Monomial::operator/: not divisible");
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] = exps_[i] - other.exps_[i];
        return r;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    std::vector<int> exps_;
};

/// Graded lexicographic order: compare total degree first, then exponents
/// lexicographically. The canonical term order of the whole toolkit.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents() < b.exponents();
    }
};

inline bool operator<(const Monomial& a, const Monomial& b) { return GradedLexLess{}(a, b); }

} // namespace lulu
