#pragma once

#include <cstdint>
#include <vector>

#include "minsep/enum_engine.hpp"
#include "minsep/map.hpp"

namespace minsep {

/// Per-genus counts |R_g|, |C_g|, |L_g|, |M_g| for genus 0..G.
struct GenusTable {
    std::vector<std::uint64_t> r, c, l, m;

    int max_genus() const { return static_cast<int>(r.size()) - 1; }
};

/// Underlying topological graph of the ribbon graph an entry encodes:
/// vertices are the hyperfaces, edges the brins. All degrees are even
/// and >= 4 for g >= 1 entries.
MultiGraph graph_of_entry(const RgEntry& e);

/// Canonical relabeling: lexicographically least sorted edge list over
/// vertex orders compatible with iterated degree/loop refinement.
MultiGraph canonical_multigraph(const MultiGraph& g);

bool graph_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// The circle's conventional representative: one vertex, one loop.
MultiGraph circle_graph();

/// C_g for every genus 0..G from the per-genus R entry lists
/// (r_lists[g] holds the R_g entries; r_lists[0] is ignored, the
/// circle is hardcoded). Output graphs are canonical and sorted.
std::vector<std::vector<MultiGraph>> reduce_to_Cg(
    const std::vector<std::vector<RgEntry>>& r_lists);

/// |L_g| from |C_0|..|C_g| via the multichoose sum over tuples with
/// sum (i+1)*k_i = g+1.
std::uint64_t count_Lg(const std::vector<std::uint64_t>& c_sizes);

/// Full table through genus G; r_counts[g] = |R_g|, c_lists from
/// reduce_to_Cg.
GenusTable build_table(const std::vector<std::uint64_t>& r_counts,
                       const std::vector<std::vector<MultiGraph>>& c_lists);

}  // namespace minsep
