#pragma once

#include <cstdint>

#include "lulu/monomial_ideal.hpp"
#include "lulu/root_data.hpp"

namespace lulu {

/// Reflection arrangement: one hyperplane per positive root, listed in the
/// same order as the root datum so variable indices line up everywhere.
struct Arrangement {
    RootSystemType type;
    std::size_t ambient_dim = 0;
    std::vector<std::vector<int>> normals;

    std::size_t size() const { return normals.size(); }
    int rank() const { return type.rank; }
};

Arrangement coxeter_arrangement(RootSystemType t);

/// Interior flat: the set of hyperplanes containing a given intersection
/// subspace, recorded as a bitmask over normal indices, plus its rank
/// (codimension of the subspace), 1 <= rank <= n-1.
struct Flat {
    std::uint64_t members = 0;
    int rank = 0;

    bool operator==(const Flat& o) const { return members == o.members && rank == o.rank; }
};

/// All interior flats, deduplicated, sorted by (rank, members).
std::vector<Flat> flats(const Arrangement& arr);

/// Nerve of the arrangement: facets are the inclusion-maximal flat supports.
struct NerveComplex {
    std::size_t vertex_count = 0;
    std::vector<std::uint64_t> facets;   // sorted ascending

    bool is_face(std::uint64_t s) const
    {
        for (std::uint64_t f : facets)
            if ((s & ~f) == 0) return true;
        return s == 0;
    }
};

NerveComplex nerve(const Arrangement& arr);

int sr_dimension(const NerveComplex& c);
int sr_codim(const Arrangement& arr, const NerveComplex& c);

/// Squarefree monomial x^J for every n-subset J of normals that is linearly
/// independent; these generate the Stanley-Reisner ideal of the nerve.
MonomialIdeal sr_ideal(const Arrangement& arr);

/// Brute-force minimal non-faces of the nerve (subsets up to size n+1),
/// for cross-checking sr_ideal at small rank.
std::vector<std::uint64_t> minimal_non_faces(const Arrangement& arr, const NerveComplex& c);

/// Census of admissible signed graphs (each component a complete balanced
/// bipartite-signed clique or the unique complete unbalanced component),
/// compared against the flat enumeration. Types A, B, D.
struct SignedGraphAudit {
    std::size_t admissible_count = 0;
    std::size_t flat_count = 0;
    std::size_t max_edge_count = 0;   // over admissible graphs of rank <= n-1
    int sr_dim = 0;
    bool counts_agree = false;
    bool dims_agree = false;
};

SignedGraphAudit signed_graph_audit(RootSystemType t);

} // namespace lulu
