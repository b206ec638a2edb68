#pragma once

#include <json.hpp>

#include "lulu/monomial_ideal.hpp"
#include "lulu/polynomial.hpp"

namespace lulu {

using Json = nlohmann::ordered_json;

/// Graded-lex list of [exponent-vector, "num/den"] pairs; deterministic
/// because the term map iterates in order and rationals are canonical.
inline Json polynomial_to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json::array({m.exponents(), rational_to_string(c)}));
    return terms;
}

/// Sorted list of exponent vectors of the minimal generators.
inline Json monomial_ideal_to_json(const MonomialIdeal& ideal)
{
    Json gens = Json::array();
    for (const Monomial& m : ideal.generators())
        gens.push_back(m.exponents());
    return gens;
}

inline Json make_report(const std::string& command)
{
    Json j;
    j["schema"] = "lulu-report/1";
    j["command"] = command;
    return j;
}

} // namespace lulu
