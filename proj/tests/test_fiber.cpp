#include <doctest.h>

#include "lulu/fiber.hpp"

using namespace lulu;

TEST_CASE("ul_membership basics")
{
    CHECK(ul_membership(QMatrix::identity(4)));

    QMatrix d(3, 3);
    d.at(0, 0) = 2;
    d.at(1, 1) = Rational(1, 2);
    d.at(2, 2) = 1;
    CHECK_FALSE(ul_membership(d));   // det = 1 but a trailing minor is not 1

    // U * L is in the cell, L * U generally is not
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        FiberInstance fi = sample_fiber_instance(3, seed);
        CHECK(ul_membership(fi.U1 * fi.L2));
        CHECK(ul_membership(fi.U2 * fi.L1));
    }
    QMatrix l = QMatrix::identity(2), u = QMatrix::identity(2);
    l.at(1, 0) = 1;
    u.at(0, 1) = 1;
    CHECK_FALSE(ul_membership(l * u));
}

TEST_CASE("identity fiber at n = 1: f1 = x21 * u12")
{
    FiberIdeal ideal = fiber_ideal(1, QMatrix::identity(2));
    REQUIRE(ideal.generators.size() == 1);
    CHECK(ideal.f0_identity);
    Polynomial expected = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
    CHECK(ideal.generators[0] == expected);
}

TEST_CASE("fiber_ideal validates its input")
{
    QMatrix two = QMatrix::identity(3) * Rational(2);
    CHECK_THROWS_AS(fiber_ideal(2, two), std::domain_error);
    CHECK_THROWS_AS(fiber_ideal(2, QMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("f0 vanishes symbolically for random g0, n <= 3")
{
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            FiberInstance fi = sample_fiber_instance(n, 1000 * n + seed);
            CHECK(fi.g0.det() == 1);
            FiberIdeal ideal = fiber_ideal(n, fi.g0);
            CHECK(ideal.f0_identity);
            CHECK(ideal.generators.size() == static_cast<std::size_t>(n));
            // constant terms: minor of g0^{-1} minus 1
            QMatrix inv = fi.g0.inverse();
            for (int j = 1; j <= n; ++j) {
                std::vector<std::size_t> idx;
                for (int k = j; k <= n; ++k) idx.push_back(static_cast<std::size_t>(k));
                CHECK(ideal.generators[static_cast<std::size_t>(j - 1)].constant_term() ==
                      inv.minor(idx, idx) - 1);
            }
        }
}

TEST_CASE("sampler is deterministic and entries are bounded")
{
    FiberInstance a = sample_fiber_instance(3, 42);
    FiberInstance b = sample_fiber_instance(3, 42);
    CHECK(a.g0 == b.g0);
    CHECK(a.L1 == b.L1);
    CHECK_FALSE(a.g0 == sample_fiber_instance(3, 43).g0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        FiberInstance fi = sample_fiber_instance(2, seed, 3);
        for (std::size_t i = 0; i < fi.U1.rows(); ++i)
            for (std::size_t j = i + 1; j < fi.U1.cols(); ++j) {
                CHECK(abs(fi.U1.at(i, j)) <= 3);
                CHECK(abs(fi.L1.at(j, i)) <= 3);
            }
        CHECK((fi.L1 * fi.U1 * fi.L2 * fi.U2) == fi.g0);
        CHECK(fi.g0.det() == 1);
    }
}

TEST_CASE("sampled points lie on the fiber via both routes")
{
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            FiberInstance fi = sample_fiber_instance(n, 7000 + seed);
            FiberIdeal ideal = fiber_ideal(n, fi.g0);
            FiberCheck check = verify_fiber_point(ideal, fi.L1, fi.U1);
            CHECK(check.via_ideal);
            CHECK(check.via_minors);
            CHECK(check.agree());
        }
}

TEST_CASE("perturbed points leave the fiber and the routes still agree")
{
    int disagreements = 0, still_member = 0;
    for (int n = 2; n <= 3; ++n)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            FiberInstance fi = sample_fiber_instance(n, 9000 + seed);
            FiberIdeal ideal = fiber_ideal(n, fi.g0);
            QMatrix broken = fi.L1;
            broken.at(1, 0) += 1;
            FiberCheck check = verify_fiber_point(ideal, broken, fi.U1);
            CHECK(check.agree());
            if (!check.agree()) ++disagreements;
            if (check.ok()) ++still_member;
        }
    CHECK(disagreements == 0);
    CHECK(still_member <= 5);   // leaving the fiber is the typical outcome
}

TEST_CASE("Jacobian rank equals n at sampled points and never exceeds n")
{
    for (int n = 1; n <= 3; ++n) {
        int full_rank = 0;
        const int samples = 20;
        for (std::uint64_t seed = 0; seed < samples; ++seed) {
            FiberInstance fi = sample_fiber_instance(n, 40000 + seed);
            FiberIdeal ideal = fiber_ideal(n, fi.g0);
            int r = jacobian_rank_at(ideal, fiber_point_coords(fi));
            CHECK(r <= n);
            if (r == n) ++full_rank;
        }
        CHECK(full_rank >= samples * 95 / 100);
    }
}

TEST_CASE("presets have determinant one and behave")
{
    for (int n = 1; n <= 4; ++n)
        for (const char* name : {"identity", "coxeter", "w0"}) {
            QMatrix g = preset_g0(n, name);
            CHECK(g.det() == 1);
        }
    CHECK(preset_g0(2, "identity") == QMatrix::identity(3));
    CHECK_THROWS(preset_g0(2, "nonsense"));
    // the coxeter preset is not in the big cell, so the origin is off-fiber
    FiberIdeal ideal = fiber_ideal(2, preset_g0(2, "coxeter"));
    CHECK(ideal.f0_identity);
    FiberCheck check = verify_fiber_point(ideal, QMatrix::identity(3), QMatrix::identity(3));
    CHECK(check.agree());
    CHECK_FALSE(check.ok());
}
