#pragma once

#include <set>
#include <vector>

#include "lulu/monomial.hpp"

namespace lulu {

/// Monomial ideal stored by its unique minimal generating set, kept as a
/// divisibility antichain in deterministic graded-lex order. Equality of
/// ideals is then set equality of generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    /// Insert a monomial, interreducing on the fly: drop it if an existing
    /// generator divides it, remove existing generators it divides.
    void insert(const Monomial& m);

    bool contains(const Monomial& m) const;
    bool subset_of(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& other) const
    {
        return num_vars_ == other.num_vars_ && gens_ == other.gens_;
    }

    int max_generator_degree() const;
    bool all_squarefree() const;

private:
    std::size_t num_vars_ = 0;
    std::vector<Monomial> gens_;   // sorted graded-lex
};

/// Divisibility antichain of minimal elements; generates the same ideal.
template <typename Range>
MonomialIdeal minimal_generators(const Range& monomials, std::size_t num_vars)
{
    MonomialIdeal ideal(num_vars);
    for (const Monomial& m : monomials)
        ideal.insert(m);
    return ideal;
}

/// Height of a nonzero monomial ideal: minimum cardinality of a set of
/// variables meeting the support of every generator, by branch and bound.
int ideal_codim(const MonomialIdeal& ideal);

} // namespace lulu
