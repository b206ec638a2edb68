#include <doctest.h>

#include <random>

#include "lulu/polynomial.hpp"

using namespace lulu;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t nv, int max_terms, int max_deg)
{
    Polynomial p(nv);
    int terms = static_cast<int>(rng() % (max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nv, 0);
        for (auto& x : e)
            x = static_cast<int>(rng() % (max_deg + 1));
        int num = static_cast<int>(rng() % 11) - 5;
        int den = 1 + static_cast<int>(rng() % 4);
        p.add_term(Monomial(std::move(e)), Rational(num, den));
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t nv)
{
    std::vector<Rational> pt(nv);
    for (auto& x : pt)
        x = Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
    return pt;
}

} // namespace

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(12345);
    const std::size_t nv = 3;
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_poly(rng, nv, 5, 3);
        Polynomial b = random_poly(rng, nv, 5, 3);
        Polynomial c = random_poly(rng, nv, 5, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial(nv));
        CHECK(a + Polynomial(nv) == a);
        CHECK(a * Polynomial::constant(nv, 1) == a);
        CHECK(a * Polynomial(nv) == Polynomial(nv));
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937_64 rng(777);
    const std::size_t nv = 3;
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = random_poly(rng, nv, 5, 3);
        Polynomial b = random_poly(rng, nv, 5, 3);
        auto pt = random_point(rng, nv);
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("exact division inverts multiplication")
{
    std::mt19937_64 rng(999);
    const std::size_t nv = 3;
    int done = 0;
    while (done < 100) {
        Polynomial a = random_poly(rng, nv, 4, 3);
        Polynomial b = random_poly(rng, nv, 4, 3);
        if (b.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
        ++done;
    }
}

TEST_CASE("inexact division throws")
{
    const std::size_t nv = 2;
    Polynomial x = Polynomial::variable(nv, 0);
    Polynomial y = Polynomial::variable(nv, 1);
    CHECK_THROWS((x * x + y).divide_exact(x));
    CHECK_THROWS(x.divide_exact(x * y));
}

TEST_CASE("homogeneous components partition the polynomial")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 3, 6, 4);
        Polynomial sum(3);
        for (int d = 0; d <= p.degree(); ++d)
            sum += p.homogeneous_component(d);
        CHECK(sum == p);
    }
}

TEST_CASE("derivative satisfies the product rule")
{
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = random_poly(rng, 3, 4, 3);
        Polynomial b = random_poly(rng, 3, 4, 3);
        for (std::size_t v = 0; v < 3; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("variable scaling multiplies each term by the right factor")
{
    std::mt19937_64 rng(161803);
    std::vector<Rational> c{Rational(2), Rational(-1, 3), Rational(5, 2)};
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 3, 5, 3);
        Polynomial q = p.scale_variables(c);
        auto pt = random_point(rng, 3);
        std::vector<Rational> scaled(3);
        for (std::size_t i = 0; i < 3; ++i)
            scaled[i] = c[i] * pt[i];
        CHECK(q.evaluate(pt) == p.evaluate(scaled));
    }
}

TEST_CASE("graded-lex leading term")
{
    Polynomial p(2);
    p.add_term(Monomial(std::vector<int>{2, 0}), 1);   // x^2
    p.add_term(Monomial(std::vector<int>{0, 3}), 1);   // y^3
    p.add_term(Monomial(std::vector<int>{1, 2}), 1);   // x y^2
    CHECK(p.leading_term().first == Monomial(std::vector<int>{1, 2}));
    CHECK(p.degree() == 3);
}

TEST_CASE("rational string round trip")
{
    for (const char* s : {"-3/2", "5/1", "0/1", "22/7"})
        CHECK(rational_to_string(rational_from_string(s)) == s);
    CHECK(rational_to_string(Rational(4, 6)) == "2/3");
}

TEST_CASE("to_string uses names and graded-lex order")
{
    Polynomial p(2);
    p.add_term(Monomial(std::vector<int>{1, 1}), Rational(-1));
    p.add_term(Monomial(std::vector<int>{1, 0}), Rational(1, 2));
    CHECK(p.to_string({"x", "y"}) == "-x*y + 1/2*x");
}
