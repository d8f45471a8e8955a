#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minsep/map.hpp"
#include "minsep/partition.hpp"

namespace minsep {

/// Admissible cycle-type triple (S, A, F) for the genus-g search.
struct TypeTriple {
    Partition S, A, F;
    int edge_count = 0;  // brin count E; all three partitions sum to it

    /// Shard key, e.g. "E4_S4_A4_F2-2".
    std::string key() const;

    friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

/// Closed range [g+1, 4g] of edge counts of elements of R_g.
std::pair<int, int> edge_bounds(int g);

/// Least genus in which the ribbon graph encoded by h is minimal
/// separating, or nullopt when phi has a fixed point (a degree-2
/// vertex, excluded for g >= 1).
std::optional<int> minsep_genus(const Hypermap& h);

/// True iff m (as a ribbon graph's map) is an element of R_g:
/// bipartite dual, sigma free of 2-cycles, and
/// g = (-c(sigma) + c(alpha) + c(phi)) / 2 - 1.
bool check_map_in_Rg(const CombinatorialMap& m, int g);

/// All triples (S, A, F) of partitions of E with F free of 1-parts,
/// c(S) + c(A) + E - c(F) = 2g + 2, non-negative implied ribbon genus,
/// and S <= A in partition order. Listed S, A, F each descending-lex.
std::vector<TypeTriple> admissible_type_triples(int g, int E);

}  // namespace minsep
