#include <doctest.h>

#include <algorithm>
#include <random>

#include "lulu/monomial_ideal.hpp"

using namespace lulu;

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t nv, int max_deg)
{
    std::vector<int> e(nv, 0);
    for (auto& x : e)
        x = static_cast<int>(rng() % (max_deg + 1));
    return Monomial(std::move(e));
}

/// Brute-force membership: divisible by some generator.
bool contains_oracle(const MonomialIdeal& ideal, const Monomial& m)
{
    for (const Monomial& g : ideal.generators())
        if (g.divides(m)) return true;
    return false;
}

/// Exhaustive vertex-cover oracle for the codimension.
int codim_oracle(const MonomialIdeal& ideal)
{
    const std::size_t nv = ideal.num_vars();
    REQUIRE(nv <= 20);
    int best = static_cast<int>(nv) + 1;
    for (std::uint64_t s = 0; s < (1ull << nv); ++s) {
        bool covers = true;
        for (const Monomial& g : ideal.generators()) {
            bool hit = false;
            for (std::size_t i = 0; i < nv && !hit; ++i)
                if (g.exponent(i) > 0 && (s & (1ull << i)))
                    hit = true;
            if (!hit) { covers = false; break; }
        }
        if (covers)
            best = std::min(best, __builtin_popcountll(s));
    }
    return best;
}

} // namespace

TEST_CASE("interreduction produces a divisibility antichain")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        MonomialIdeal ideal(4);
        for (int k = 0; k < 20; ++k)
            ideal.insert(random_monomial(rng, 4, 3));
        const auto& g = ideal.generators();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (i != j)
                    CHECK_FALSE(g[i].divides(g[j]));
        CHECK(std::is_sorted(g.begin(), g.end(), GradedLexLess{}));
    }
}

TEST_CASE("minimal_generators is idempotent and order independent")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Monomial> input;
        for (int k = 0; k < 15; ++k)
            input.push_back(random_monomial(rng, 4, 3));
        MonomialIdeal a = minimal_generators(input, 4);
        std::shuffle(input.begin(), input.end(), rng);
        MonomialIdeal b = minimal_generators(input, 4);
        CHECK(a == b);
        CHECK(minimal_generators(a.generators(), 4) == a);
    }
}

TEST_CASE("contains matches the divisibility oracle")
{
    std::mt19937_64 rng(404);
    MonomialIdeal ideal(4);
    for (int k = 0; k < 10; ++k)
        ideal.insert(random_monomial(rng, 4, 2));
    for (int k = 0; k < 200; ++k) {
        Monomial m = random_monomial(rng, 4, 4);
        CHECK(ideal.contains(m) == contains_oracle(ideal, m));
    }
}

TEST_CASE("subset_of and equality")
{
    MonomialIdeal a(3), b(3);
    a.insert(Monomial(std::vector<int>{1, 1, 0}));
    a.insert(Monomial(std::vector<int>{0, 1, 1}));
    b = a;
    CHECK(a == b);
    CHECK(a.subset_of(b));
    b.insert(Monomial(std::vector<int>{1, 0, 0}));   // swallows {1,1,0}
    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK_FALSE(a == b);
}

TEST_CASE("codimension matches the exhaustive vertex-cover oracle")
{
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal(6);
        int gens = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < gens; ++k) {
            Monomial m = random_monomial(rng, 6, 2);
            if (!m.is_one())
                ideal.insert(m);
        }
        if (ideal.is_zero()) continue;
        CHECK(ideal_codim(ideal) == codim_oracle(ideal));
    }
}

TEST_CASE("codimension of fixed fixtures")
{
    // three pairwise products of three variables: any two of them cover
    MonomialIdeal ideal(3);
    ideal.insert(Monomial(std::vector<int>{1, 1, 0}));
    ideal.insert(Monomial(std::vector<int>{1, 0, 1}));
    ideal.insert(Monomial(std::vector<int>{0, 1, 1}));
    CHECK(ideal_codim(ideal) == 2);

    MonomialIdeal principal(4);
    principal.insert(Monomial(std::vector<int>{1, 1, 1, 1}));
    CHECK(ideal_codim(principal) == 1);

    MonomialIdeal maximal(3);
    maximal.insert(Monomial(std::vector<int>{2, 0, 0}));
    maximal.insert(Monomial(std::vector<int>{0, 1, 0}));
    maximal.insert(Monomial(std::vector<int>{0, 0, 3}));
    CHECK(ideal_codim(maximal) == 3);
    CHECK_FALSE(maximal.all_squarefree());
    CHECK(maximal.max_generator_degree() == 3);
}

TEST_CASE("degree and squarefree reporting")
{
    MonomialIdeal ideal(3);
    ideal.insert(Monomial(std::vector<int>{1, 1, 0}));
    ideal.insert(Monomial(std::vector<int>{0, 0, 1}));
    CHECK(ideal.all_squarefree());
    CHECK(ideal.max_generator_degree() == 2);
    CHECK(ideal.generator_count() == 2);
}
