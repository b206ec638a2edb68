#include "lulu/polynomial.hpp"

#include <sstream>

namespace lulu {

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const
{
    check_vars(divisor);
    if (divisor.is_zero())
        throw std::invalid_argument("divide_exact: division by zero");
    Polynomial quotient(num_vars_);
    Polynomial rem = *this;
    const auto& [dm, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!dm.divides(rm))
            throw std::invalid_argument("divide_exact: division is not exact");
        Monomial qm = rm / dm;
        Rational qc = rc / dc;
        quotient.add_term(qm, qc);
        rem -= divisor * Polynomial::term(qm, qc);
    }
    return quotient;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != num_vars_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Rational result = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            Rational base = point[i];
            for (int k = 0; k < e; ++k)
                t *= base;
        }
        result += t;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    if (var >= num_vars_)
        throw std::invalid_argument("derivative: variable out of range");
    Polynomial r(num_vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

Polynomial Polynomial::scale_variables(const std::vector<Rational>& c) const
{
    if (c.size() != num_vars_)
        throw std::invalid_argument("scale_variables: dimension mismatch");
    Polynomial r(num_vars_);
    for (const auto& [m, coeff] : terms_) {
        Rational f = coeff;
        for (std::size_t i = 0; i < num_vars_; ++i)
            for (int k = 0; k < m.exponent(i); ++k)
                f *= c[i];
        r.add_term(m, f);
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || m.is_one()) {
            os << numer(a).str();
            if (denom(a) != 1) os << "/" << denom(a).str();
        }
        bool printed = !unit || m.is_one();
        for (std::size_t i = 0; i < num_vars_; ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (printed) os << "*";
            if (i < var_names.size())
                os << var_names[i];
            else
                os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

} // namespace lulu
