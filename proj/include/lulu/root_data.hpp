#pragma once

#include <string>
#include <vector>

#include "lulu/qmatrix.hpp"

namespace lulu {

enum class RootFamily { A, B, C, D };

std::string family_name(RootFamily f);
RootFamily family_from_string(const std::string& s);

struct RootSystemType {
    RootFamily family;
    int rank;   // n >= 2, D requires n >= 3
};

/// Root as an integer vector in the ambient lattice: Z^{n+1} for type A
/// (e_i - e_j), Z^n for B/C/D (+-e_i +- e_j, e_i, 2e_i).
struct Root {
    std::vector<int> coords;

    bool operator==(const Root& other) const { return coords == other.coords; }
    Root negated() const
    {
        Root r = *this;
        for (int& c : r.coords) c = -c;
        return r;
    }
};

/// A classical root system together with a concrete matrix realization of its
/// Chevalley basis, split so that the Borel subgroup is upper triangular and
/// the Cartan subalgebra is diagonal.
class RootDatum {
public:
    RootSystemType type;
    int matrix_dim = 0;              // n+1, 2n+1, 2n, 2n for A/B/C/D
    std::vector<Root> positive_roots;
    std::vector<QMatrix> X;          // strictly upper triangular root vectors
    std::vector<QMatrix> Y;          // opposite root vectors, [X,Y] = H
    std::vector<QMatrix> H;          // coroot matrices, diagonal
    std::vector<QMatrix> h_basis;    // ordered basis v_1..v_n of the Cartan

    /// invariant bilinear form of the realization; empty for type A
    QMatrix form;

    int rank() const { return type.rank; }
    std::size_t num_positive_roots() const { return positive_roots.size(); }

    /// Index of a positive root; -1 if absent.
    int positive_root_index(const Root& r) const;

    /// Membership in the realized Lie algebra (trace zero for A, the
    /// form-compatibility identity for B/C/D).
    bool is_member(const QMatrix& m) const;
    bool is_member(const PolyMatrix& m) const;

    /// Coordinates of a diagonal Cartan element in h_basis.
    std::vector<Rational> h_coords(const QMatrix& cartan) const;
};

/// Build the datum for a classical type; throws on out-of-range rank.
RootDatum build_root_datum(RootSystemType t);

/// One-parameter unipotent subgroup exp(t * X_alpha), exact because the root
/// vectors cube to zero in the defining representation. alpha may be a
/// positive or negative root of the datum.
PolyMatrix one_param(const RootDatum& datum, const Root& alpha, const Polynomial& t);

/// Projection g = l + h + u -> h expressed in h_basis coordinates; checks
/// that the matrix lies in the realized algebra.
std::vector<Polynomial> proj_h(const RootDatum& datum, const PolyMatrix& m);
std::vector<Rational> proj_h(const RootDatum& datum, const QMatrix& m);

/// The coroots of the simple roots, as an alternative Cartan basis.
std::vector<QMatrix> simple_coroot_basis(const RootDatum& datum);

} // namespace lulu
