#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lulu/monomial.hpp"
#include "lulu/rational.hpp"

namespace lulu {

/// Sparse multivariate polynomial over Q with terms kept in graded-lex order.
/// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Rational& c)
    {
        Polynomial p(num_vars);
        if (c != 0)
            p.terms_.emplace(Monomial(num_vars), c);
        return p;
    }

    static Polynomial variable(std::size_t num_vars, std::size_t index, const Rational& coeff = 1)
    {
        if (index >= num_vars)
            throw std::invalid_argument("Polynomial::variable: index out of range");
        Polynomial p(num_vars);
        if (coeff != 0) {
            std::vector<int> e(num_vars, 0);
            e[index] = 1;
            p.terms_.emplace(Monomial(std::move(e)), coeff);
        }
        return p;
    }

    static Polynomial term(const Monomial& m, const Rational& c)
    {
        Polynomial p(m.num_vars());
        if (c != 0)
            p.terms_.emplace(m, c);
        return p;
    }

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const
    {
        auto it = terms_.find(Monomial(num_vars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const   // degree of 0 reported as -1
    {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    /// Leading term in graded-lex order.
    const std::pair<const Monomial, Rational>& leading_term() const
    {
        if (terms_.empty())
            throw std::logic_error("Polynomial::leading_term: zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (m.num_vars() != num_vars_)
            throw std::invalid_argument("Polynomial::add_term: variable count mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& other) const
    {
        check_vars(other);
        Polynomial r = *this;
        for (const auto& [m, c] : other.terms_)
            r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& other) const
    {
        check_vars(other);
        Polynomial r = *this;
        for (const auto& [m, c] : other.terms_)
            r.add_term(m, -c);
        return r;
    }

    Polynomial operator-() const
    {
        Polynomial r(num_vars_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& other) const
    {
        check_vars(other);
        Polynomial r(num_vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : other.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& c) const
    {
        Polynomial r(num_vars_);
        if (c == 0) return r;
        for (const auto& [m, coeff] : terms_)
            r.terms_.emplace(m, coeff * c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        check_vars(other);
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other)
    {
        check_vars(other);
        for (const auto& [m, c] : other.terms_)
            add_term(m, -c);
        return *this;
    }

    bool operator==(const Polynomial& other) const
    {
        return num_vars_ == other.num_vars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Exact quotient this / divisor; throws if the division is not exact.
    Polynomial divide_exact(const Polynomial& divisor) const;

    /// Monomials with nonzero coefficient.
    std::set<Monomial, GradedLexLess> support() const
    {
        std::set<Monomial, GradedLexLess> s;
        for (const auto& [m, c] : terms_)
            s.insert(m);
        return s;
    }

    /// Sum of the terms of total degree d.
    Polynomial homogeneous_component(int d) const
    {
        Polynomial r(num_vars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d)
                r.terms_.emplace(m, c);
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const;
    Polynomial derivative(std::size_t var) const;

    /// Substitute x_i -> c_i * x_i (all c_i nonzero).
    Polynomial scale_variables(const std::vector<Rational>& c) const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    void check_vars(const Polynomial& other) const
    {
        if (num_vars_ != other.num_vars_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    std::size_t num_vars_ = 0;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace lulu
