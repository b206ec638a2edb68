#include "lulu/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lulu {

void MonomialIdeal::insert(const Monomial& m)
{
    if (m.num_vars() != num_vars_)
        throw std::invalid_argument("MonomialIdeal::insert: variable count mismatch");
    for (const Monomial& g : gens_)
        if (g.divides(m))
            return;
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                               [&](const Monomial& g) { return m.divides(g); }),
                gens_.end());
    gens_.insert(std::upper_bound(gens_.begin(), gens_.end(), m, GradedLexLess{}), m);
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    if (m.num_vars() != num_vars_)
        throw std::invalid_argument("MonomialIdeal::contains: variable count mismatch");
    for (const Monomial& g : gens_)
        if (g.divides(m))
            return true;
    return false;
}

bool MonomialIdeal::subset_of(const MonomialIdeal& other) const
{
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("MonomialIdeal::subset_of: variable count mismatch");
    for (const Monomial& g : gens_)
        if (!other.contains(g))
            return false;
    return true;
}

int MonomialIdeal::max_generator_degree() const
{
    int d = 0;
    for (const Monomial& g : gens_)
        d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::all_squarefree() const
{
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.squarefree(); });
}

namespace {

using VarSet = std::uint64_t;

void codim_branch(const std::vector<VarSet>& supports, VarSet chosen, int size, int& best)
{
    if (size >= best) return;
    // first generator not met by the chosen variables
    const VarSet* uncovered = nullptr;
    for (const VarSet& s : supports)
        if (!(s & chosen)) { uncovered = &s; break; }
    if (!uncovered) {
        best = size;
        return;
    }
    for (VarSet s = *uncovered; s; s &= s - 1) {
        VarSet bit = s & (~s + 1);
        codim_branch(supports, chosen | bit, size + 1, best);
    }
}

} // namespace

int ideal_codim(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        throw std::invalid_argument("ideal_codim: codimension of the zero ideal is undefined");
    if (ideal.num_vars() > 64)
        throw std::invalid_argument("ideal_codim: more than 64 variables unsupported");
    std::vector<VarSet> supports;
    supports.reserve(ideal.generator_count());
    for (const Monomial& g : ideal.generators()) {
        VarSet s = 0;
        for (std::size_t i = 0; i < g.num_vars(); ++i)
            if (g.exponent(i) > 0)
                s |= VarSet(1) << i;
        if (s == 0)   // unit generator: ideal is the whole ring
            throw std::invalid_argument("ideal_codim: ideal contains a unit");
        supports.push_back(s);
    }
    int best = static_cast<int>(ideal.num_vars());
    codim_branch(supports, 0, 0, best);
    return best;
}

} // namespace lulu
