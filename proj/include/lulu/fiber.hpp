#pragma once

#include <cstdint>
#include <string>

#include "lulu/poly_matrix.hpp"
#include "lulu/qmatrix.hpp"

namespace lulu {

/// A point of the multiplication map mu : L x U x L x U -> SL_{n+1},
/// produced by forward sampling so the product identity is exact.
struct FiberInstance {
    int n = 0;
    QMatrix g0;                 // L1 U1 L2 U2, det 1
    QMatrix L1, U1, L2, U2;     // unitriangular factors
    std::uint64_t seed = 0;
};

/// Generators f_1..f_n of the fiber ideal over g0: f_j is the trailing
/// principal (n+1-j)-minor of g0^{-1}(I+x)(I+u) minus 1. Variables: the
/// strictly upper entries u_{ij} (pairs i<j in lex order) followed by the
/// strictly lower entries x_{ji} in the same pair order.
struct FiberIdeal {
    int n = 0;
    std::size_t num_vars = 0;   // 2 * C(n+1, 2)
    QMatrix g0;
    std::vector<Polynomial> generators;
    bool f0_identity = false;   // det(g0^{-1}(I+x)(I+u)) == 1 checked symbolically
};

/// Number of strictly-upper pairs of an m x m matrix.
inline std::size_t pair_count(int m) { return static_cast<std::size_t>(m) * (m - 1) / 2; }

/// True iff every trailing principal minor of M equals 1, i.e. M lies in
/// the open cell U L.
bool ul_membership(const QMatrix& m);

/// Build the fiber ideal; throws domain_error unless det(g0) = 1.
FiberIdeal fiber_ideal(int n, const QMatrix& g0);

/// Deterministic sampler: unitriangular factors with uniform integer entries
/// in [-bound, bound], g0 defined as their product.
FiberInstance sample_fiber_instance(int n, std::uint64_t seed, int bound = 3);

/// Coordinates (u from U1, x from L1) of the instance in the ideal's
/// variable order.
std::vector<Rational> fiber_point_coords(const FiberInstance& fi);

struct FiberCheck {
    bool via_ideal = false;    // all f_j vanish at (u, x)
    bool via_minors = false;   // ul_membership(g0^{-1} L1 U1)
    bool agree() const { return via_ideal == via_minors; }
    bool ok() const { return via_ideal && via_minors; }
};

FiberCheck verify_fiber_point(const FiberIdeal& ideal, const QMatrix& L1, const QMatrix& U1);

/// Exact rank of the n x num_vars Jacobian of the generators at a point.
int jacobian_rank_at(const FiberIdeal& ideal, const std::vector<Rational>& point);

/// Torus-normalizer representatives for exploring reordered fibers:
/// "identity", "coxeter" (long-cycle permutation), "w0" (antidiagonal),
/// signs fixed so the determinant is 1.
QMatrix preset_g0(int n, const std::string& name);

} // namespace lulu
