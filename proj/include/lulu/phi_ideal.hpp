#pragma once

#include "lulu/monomial_ideal.hpp"
#include "lulu/root_data.hpp"

namespace lulu {

/// D x n matrix of the projected adjoint action: row r holds the Cartan
/// coordinates of proj_h(Ad_{Psi(x)} Y_{alpha_r}), polynomials in x_1..x_D.
struct PhiMatrix {
    const RootDatum* datum = nullptr;
    PolyMatrix entries;   // D rows, n columns
};

struct IBResult {
    MonomialIdeal ideal;
    std::size_t minor_count = 0;
    int max_degree = 0;
    bool squarefree = false;
};

/// Product of the one-parameter subgroups in the fixed listing order:
/// Psi(x_1..x_D) = lambda_{alpha_1}(x_1) ... lambda_{alpha_D}(x_D).
PolyMatrix build_psi(const RootDatum& datum);

/// Type A only: the product taken in reverse-lexicographic order, which
/// collapses to I + u with u_{ij} placed literally in the entries.
PolyMatrix build_psi_revlex(const RootDatum& datum);

PhiMatrix phi_matrix(const RootDatum& datum);

/// Type A closed form: row (i,j) has entries V_{ik} U_{kj} with U = I + u and
/// V its inverse. An independent route to the same monomial ideal.
PhiMatrix phi_matrix_closed_form_a(const RootDatum& datum);

/// All maximal-minor polynomials q_I, I running over n-subsets of rows in
/// lexicographic order of their sorted index lists. Computed with a shared
/// sub-determinant cache over row subsets.
std::vector<Polynomial> maximal_minors(const PhiMatrix& phi);

/// Union of minor supports, interreduced: the monomial ideal of the pullback
/// of the rank-dropping locus.
IBResult compute_IB(const PhiMatrix& phi);
IBResult compute_IB(const RootDatum& datum);

/// Check that the degree-1 part of row alpha is exactly (coords of H_alpha)
/// times x_alpha.
bool verify_linear_part(const PhiMatrix& phi);

/// Recompute phi with a different Cartan basis given by n x n coordinate
/// matrix B (columns = new basis vectors in h_basis coordinates).
PhiMatrix change_h_basis(const PhiMatrix& phi, const QMatrix& basis);

} // namespace lulu
