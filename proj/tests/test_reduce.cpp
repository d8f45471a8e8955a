#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "minsep/enum_engine.hpp"
#include "minsep/graph_reduce.hpp"

using namespace minsep;

namespace {

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
    // perm[v-1] is the new 1-based label of vertex v
    MultiGraph out;
    out.vertex_count = g.vertex_count;
    for (auto [a, b] : g.edges) {
        int x = perm[a - 1], y = perm[b - 1];
        out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<MultiGraph> dummy_graphs(int count) {
    // distinct placeholder graphs; only list sizes matter to the caller
    std::vector<MultiGraph> out;
    for (int i = 0; i < count; ++i) {
        MultiGraph g;
        g.vertex_count = 1;
        for (int j = 0; j <= i; ++j) g.edges.emplace_back(1, 1);
        out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("circle graph") {
    const MultiGraph c = circle_graph();
    CHECK(c.vertex_count == 1);
    CHECK(c.edges == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(c.degree(1) == 2);
}

TEST_CASE("canonical form is invariant under relabeling") {
    // theta graph plus a loop and a pendant-free double edge
    MultiGraph g;
    g.vertex_count = 4;
    g.edges = {{1, 2}, {1, 2}, {1, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 4}, {1, 4}};
    std::sort(g.edges.begin(), g.edges.end());
    const MultiGraph canon = canonical_multigraph(g);
    std::mt19937 rng(12345);
    std::vector<int> perm = {1, 2, 3, 4};
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const MultiGraph moved = relabel(g, perm);
        CHECK(canonical_multigraph(moved) == canon);
        CHECK(graph_isomorphic(g, moved));
    }
}

TEST_CASE("non-isomorphic graphs get distinct canonical forms") {
    MultiGraph two_loops;  // figure eight
    two_loops.vertex_count = 1;
    two_loops.edges = {{1, 1}, {1, 1}};
    MultiGraph doubled_edge;
    doubled_edge.vertex_count = 2;
    doubled_edge.edges = {{1, 2}, {1, 2}};
    CHECK_FALSE(graph_isomorphic(two_loops, doubled_edge));
    CHECK(canonical_multigraph(two_loops) != canonical_multigraph(doubled_edge));
    // same degree sequence (2-regular), different structure
    MultiGraph hexagon;
    hexagon.vertex_count = 6;
    hexagon.edges = {{1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    MultiGraph two_triangles;
    two_triangles.vertex_count = 6;
    two_triangles.edges = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}};
    CHECK_FALSE(graph_isomorphic(hexagon, two_triangles));
}

TEST_CASE("reduction of the genus 1 and 2 searches") {
    std::vector<std::vector<RgEntry>> r_lists(3);
    r_lists[1] = enumerate_Rg(1);
    r_lists[2] = enumerate_Rg(2);
    const auto c = reduce_to_Cg(r_lists);
    REQUIRE(c.size() == 3);
    CHECK(c[0].size() == 1);
    CHECK(c[0][0] == canonical_multigraph(circle_graph()));
    CHECK(c[1].size() == 3);
    CHECK(c[2].size() == 17);
    // sorted, canonical, duplicate-free
    for (const auto& list : c) {
        CHECK(std::is_sorted(list.begin(), list.end(),
                             [](const MultiGraph& a, const MultiGraph& b) {
                                 return std::tie(a.vertex_count, a.edges) <
                                        std::tie(b.vertex_count, b.edges);
                             }));
        for (const auto& g : list) CHECK(canonical_multigraph(g) == g);
    }
    // a genus-1 graph never reappears in C_2
    for (const auto& g1 : c[1])
        for (const auto& g2 : c[2]) CHECK_FALSE(graph_isomorphic(g1, g2));
}

TEST_CASE("graph_of_entry degrees are even and at least 4") {
    for (const auto& e : enumerate_Rg(1)) {
        const MultiGraph g = graph_of_entry(e);
        for (int v = 1; v <= g.vertex_count; ++v) {
            CHECK(g.degree(v) >= 4);
            CHECK(g.degree(v) % 2 == 0);
        }
    }
}

TEST_CASE("count_Lg fixtures") {
    CHECK(count_Lg({1}) == 1);
    CHECK(count_Lg({1, 3}) == 4);
    CHECK(count_Lg({1, 3, 17}) == 21);
    CHECK(count_Lg({1, 3, 17, 164}) == 191);
}

TEST_CASE("build_table accumulates M correctly") {
    const std::vector<std::uint64_t> r = {1, 3, 31, 1831};
    const std::vector<std::vector<MultiGraph>> c = {dummy_graphs(1), dummy_graphs(3),
                                                    dummy_graphs(17), dummy_graphs(164)};
    const GenusTable t = build_table(r, c);
    CHECK(t.max_genus() == 3);
    CHECK(t.r == std::vector<std::uint64_t>{1, 3, 31, 1831});
    CHECK(t.c == std::vector<std::uint64_t>{1, 3, 17, 164});
    CHECK(t.l == std::vector<std::uint64_t>{1, 4, 21, 191});
    CHECK(t.m == std::vector<std::uint64_t>{1, 5, 26, 217});
}
