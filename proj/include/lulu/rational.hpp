#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lulu {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den" form used in JSON output, e.g. "-3/2", "5/1".
inline std::string rational_to_string(const Rational& r)
{
    return numer(r).str() + "/" + denom(r).str();
}

inline Rational rational_from_string(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("rational_from_string: denominator must be positive");
    return Rational(num, den);
}

} // namespace lulu
