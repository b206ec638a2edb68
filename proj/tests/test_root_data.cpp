#include <doctest.h>

#include "lulu/root_data.hpp"

using namespace lulu;

namespace {

const std::vector<RootSystemType> kTypes = {
    {RootFamily::A, 2}, {RootFamily::A, 3}, {RootFamily::A, 4},
    {RootFamily::B, 2}, {RootFamily::B, 3},
    {RootFamily::C, 2}, {RootFamily::C, 3},
    {RootFamily::D, 3}, {RootFamily::D, 4},
};

std::size_t expected_count(RootSystemType t)
{
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case RootFamily::A: return n * (n + 1) / 2;
        case RootFamily::B:
        case RootFamily::C: return n * n;
        case RootFamily::D: return n * (n - 1);
    }
    return 0;
}

bool strictly_upper(const QMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i && j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool diagonal(const QMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("positive root counts")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        CHECK(d.num_positive_roots() == expected_count(t));
        CHECK(d.X.size() == d.num_positive_roots());
        CHECK(d.Y.size() == d.num_positive_roots());
        CHECK(d.H.size() == d.num_positive_roots());
    }
}

TEST_CASE("rank bounds are enforced")
{
    CHECK_THROWS(build_root_datum({RootFamily::A, 1}));
    CHECK_THROWS(build_root_datum({RootFamily::D, 2}));
    CHECK_NOTHROW(build_root_datum({RootFamily::D, 3}));
}

TEST_CASE("Chevalley triples: [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        for (std::size_t r = 0; r < d.num_positive_roots(); ++r) {
            CHECK(bracket(d.X[r], d.Y[r]) == d.H[r]);
            CHECK(bracket(d.H[r], d.X[r]) == d.X[r] * Rational(2));
            CHECK(bracket(d.H[r], d.Y[r]) == d.Y[r] * Rational(-2));
        }
    }
}

TEST_CASE("triangularity and nilpotency of the realization")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        for (std::size_t r = 0; r < d.num_positive_roots(); ++r) {
            CHECK(strictly_upper(d.X[r]));
            CHECK(strictly_upper(d.Y[r].transpose()));
            CHECK(diagonal(d.H[r]));
            CHECK((d.X[r] * d.X[r] * d.X[r]).is_zero());
        }
        for (const QMatrix& v : d.h_basis)
            CHECK(diagonal(v));
    }
}

TEST_CASE("all basis matrices lie in the realized algebra")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        for (std::size_t r = 0; r < d.num_positive_roots(); ++r) {
            CHECK(d.is_member(d.X[r]));
            CHECK(d.is_member(d.Y[r]));
            CHECK(d.is_member(d.H[r]));
        }
        for (const QMatrix& v : d.h_basis)
            CHECK(d.is_member(v));
        // negative control: a matrix unit that breaks the defining identity
        QMatrix bad(d.matrix_dim, d.matrix_dim);
        bad.at(0, 0) = 1;
        CHECK_FALSE(d.is_member(bad));
    }
}

TEST_CASE("structure constants: [X_{e1-e2}, X_{e2-e3}] = +-X_{e1-e3} in A2")
{
    RootDatum d = build_root_datum({RootFamily::A, 2});
    // listing order: (1,2), (1,3), (2,3)
    QMatrix c = bracket(d.X[0], d.X[2]);
    bool plus = c == d.X[1];
    bool minus = c == d.X[1] * Rational(-1);
    CHECK((plus || minus));
    CHECK(plus);   // the chosen realization gives E12*E23 = E13
}

TEST_CASE("one_param basics")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        const std::size_t D = d.num_positive_roots();
        Polynomial x0 = Polynomial::variable(D, 0);
        for (std::size_t r = 0; r < std::min<std::size_t>(D, 4); ++r) {
            PolyMatrix lam = one_param(d, d.positive_roots[r], x0);
            CHECK(lam.is_unitriangular());
            // lambda(t) lambda(-t) = I
            PolyMatrix lam_neg = one_param(d, d.positive_roots[r], -x0);
            CHECK((lam * lam_neg).is_identity());
            // zero evaluation = identity
            std::vector<Rational> zero(D, 0);
            auto at0 = lam.evaluate(zero);
            for (std::size_t i = 0; i < lam.rows(); ++i)
                for (std::size_t j = 0; j < lam.cols(); ++j)
                    CHECK(at0[i][j] == Rational(i == j ? 1 : 0));
        }
        // negative roots give lower-triangular subgroups
        PolyMatrix low = one_param(d, d.positive_roots[0].negated(), x0);
        CHECK(low.is_unitriangular());
        CHECK_THROWS_AS(one_param(d, Root{std::vector<int>(d.positive_roots[0].coords.size(), 3)}, x0),
                        std::domain_error);
    }
}

TEST_CASE("type A one_param is I + t E_ij")
{
    RootDatum d = build_root_datum({RootFamily::A, 3});
    Polynomial tpoly = Polynomial::variable(6, 2);
    for (std::size_t r = 0; r < d.num_positive_roots(); ++r) {
        PolyMatrix lam = one_param(d, d.positive_roots[r], tpoly);
        int off_diag = 0;
        for (std::size_t i = 0; i < lam.rows(); ++i)
            for (std::size_t j = 0; j < lam.cols(); ++j) {
                if (i == j) {
                    CHECK(lam.at(i, j) == Polynomial::constant(6, 1));
                } else if (!lam.at(i, j).is_zero()) {
                    CHECK(lam.at(i, j) == tpoly);
                    ++off_diag;
                }
            }
        CHECK(off_diag == 1);
    }
}

TEST_CASE("B2 short root exponential has a t^2 entry")
{
    RootDatum d = build_root_datum({RootFamily::B, 2});
    // short roots e1, e2 sit at the end of the listing
    Root e1{std::vector<int>{1, 0}};
    Polynomial tpoly = Polynomial::variable(4, 0);
    PolyMatrix lam = one_param(d, e1, tpoly);
    bool has_t2 = false;
    for (std::size_t i = 0; i < lam.rows(); ++i)
        for (std::size_t j = 0; j < lam.cols(); ++j)
            if (lam.at(i, j).degree() == 2) has_t2 = true;
    CHECK(has_t2);
}

TEST_CASE("one_param preserves the bilinear form for B, C, D")
{
    for (RootSystemType t : {RootSystemType{RootFamily::B, 2}, RootSystemType{RootFamily::B, 3},
                             RootSystemType{RootFamily::C, 2}, RootSystemType{RootFamily::C, 3},
                             RootSystemType{RootFamily::D, 3}}) {
        RootDatum d = build_root_datum(t);
        const std::size_t D = d.num_positive_roots();
        Polynomial x0 = Polynomial::variable(D, 0);
        PolyMatrix form = d.form.to_poly(D);
        for (std::size_t r = 0; r < D; ++r) {
            PolyMatrix g = one_param(d, d.positive_roots[r], x0);
            // g^T J g = J as an exact polynomial identity
            PolyMatrix gt(g.cols(), g.rows(), D);
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j)
                    gt.at(j, i) = g.at(i, j);
            CHECK(gt * form * g == form);
        }
    }
}

TEST_CASE("proj_h fixtures")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        const int n = d.rank();
        // H_alpha projects to its own coordinates
        for (std::size_t r = 0; r < d.num_positive_roots(); ++r) {
            auto coords = proj_h(d, d.H[r]);
            CHECK(coords == d.h_coords(d.H[r]));
            // X_alpha and Y_alpha project to zero
            for (const Rational& c : proj_h(d, d.X[r]))
                CHECK(c == 0);
            for (const Rational& c : proj_h(d, d.Y[r]))
                CHECK(c == 0);
        }
        // linearity on a mixed element
        QMatrix mixed = d.Y[0] + d.H[0] + d.X[d.num_positive_roots() - 1];
        CHECK(proj_h(d, mixed) == d.h_coords(d.H[0]));
        // basis coordinates are the canonical unit vectors
        for (int k = 0; k < n; ++k) {
            auto coords = d.h_coords(d.h_basis[static_cast<std::size_t>(k)]);
            for (int s = 0; s < n; ++s)
                CHECK(coords[static_cast<std::size_t>(s)] == Rational(s == k ? 1 : 0));
        }
        // non-members are rejected
        QMatrix bad(d.matrix_dim, d.matrix_dim);
        bad.at(0, 0) = 1;
        CHECK_THROWS_AS(proj_h(d, bad), std::domain_error);
    }
}

TEST_CASE("simple coroots form a basis of the Cartan")
{
    for (RootSystemType t : kTypes) {
        RootDatum d = build_root_datum(t);
        auto coroots = simple_coroot_basis(d);
        const std::size_t n = static_cast<std::size_t>(d.rank());
        REQUIRE(coroots.size() == n);
        QMatrix coords(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = d.h_coords(coroots[i]);
            for (std::size_t j = 0; j < n; ++j)
                coords.at(i, j) = c[j];
        }
        CHECK(coords.det() != 0);
    }
}
