#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minsep/partition.hpp"
#include "minsep/perm.hpp"

namespace minsep {

/// Triple (sigma, alpha, phi) on 2n edge ends. alpha is a fixed-point-
/// free involution, <sigma, alpha> is transitive, and
/// compose(sigma, compose(alpha, phi)) = identity.
struct CombinatorialMap {
    int edge_count = 0;  // n; permutations act on 2n points
    Perm sigma, alpha, phi;

    /// Throws std::invalid_argument on any violated condition.
    static CombinatorialMap create(Perm sigma, Perm alpha, Perm phi);

    /// Derives phi from sigma and alpha.
    static CombinatorialMap from_sigma_alpha(Perm sigma, Perm alpha);
};

/// Triple (sigma, alpha, phi) on n brins with product identity and
/// transitive joint action.
struct Hypermap {
    int brin_count = 0;
    Perm sigma, alpha, phi;

    static Hypermap create(Perm sigma, Perm alpha, Perm phi);
    static Hypermap from_sigma_alpha(Perm sigma, Perm alpha);
};

/// Undirected multigraph: loops allowed, edges stored as sorted pairs
/// of 1-based vertices.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// Degree of 1-based vertex v, counting loops twice.
    int degree(int v) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

/// g_R = (2 - c(sigma) + c(alpha) - c(phi)) / 2.
int map_genus(const CombinatorialMap& m);

/// (phi, alpha, sigma); an involution, preserves genus.
CombinatorialMap dual(const CombinatorialMap& m);

/// 2-coloring of the sigma-cycles such that each alpha-pair joins
/// oppositely colored vertices, or nullopt if none exists. The value
/// maps each point (0-based) to the color (0 black / 1 white) of the
/// vertex its sigma-cycle represents; the vertex containing point 1
/// is black.
std::optional<std::vector<int>> vertex_bipartition(const CombinatorialMap& m);

/// True iff the dual of m has a vertex bipartition, i.e. the faces of
/// m admit a proper 2-coloring.
bool face_two_colorable(const CombinatorialMap& m);

/// (2 - c(sigma) - c(alpha) + n - c(phi)) / 2.
int hypermap_genus(const Hypermap& h);

/// Walsh correspondence, fixed labeling: brin i becomes edge i with
/// black end 2i-1 and white end 2i; sigma'(2i-1) = 2*sigma(i)-1,
/// sigma'(2i) = 2*alpha(i), alpha' = (1,2)(3,4)..., phi' derived.
/// Returns the bipartite map and its point coloring (0 black on odd
/// labels, 1 white on even labels).
std::pair<CombinatorialMap, std::vector<int>> map_from_hypermap(const Hypermap& h);

/// Inverse of the Walsh construction. Edges are numbered so that edge
/// i is the alpha-pair with the i-th smallest minimum end. The
/// coloring maps each 0-based point to 0 (black) or 1 (white); it must
/// be constant on sigma-cycles and alpha must join opposite colors.
/// Throws std::invalid_argument("not bipartite") otherwise.
Hypermap hypermap_from_map(const CombinatorialMap& m, const std::vector<int>& coloring);

/// Vertices are the sigma-cycles (numbered by smallest contained
/// point), one edge per alpha-pair.
MultiGraph underlying_multigraph(const CombinatorialMap& m);

}  // namespace minsep
