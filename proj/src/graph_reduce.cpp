#include "minsep/graph_reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace minsep {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
    if (k == 0) return 1;
    return binomial(n + k - 1, k);
}

}  // namespace

MultiGraph graph_of_entry(const RgEntry& e) {
    auto [bip, coloring] = map_from_hypermap(e.hypermap);
    return underlying_multigraph(dual(bip));
}

MultiGraph canonical_multigraph(const MultiGraph& g) {
    const int n = g.vertex_count;
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    std::vector<int> loops(n, 0);
    for (auto [a, b] : g.edges) {
        if (a == b) {
            ++loops[a - 1];
        } else {
            ++adj[a - 1][b - 1];
            ++adj[b - 1][a - 1];
        }
    }

    // Iterated refinement: vertices get classes by (degree, loops),
    // then by the multiset of (neighbor class, multiplicity) until
    // stable. Classes are numbered in sorted signature order, which is
    // label-independent.
    std::vector<int> cls(n, 0);
    {
        using Sig = std::vector<int>;
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {g.degree(v + 1), loops[v]};
        while (true) {
            std::vector<Sig> sorted_sigs = sig;
            std::sort(sorted_sigs.begin(), sorted_sigs.end());
            sorted_sigs.erase(std::unique(sorted_sigs.begin(), sorted_sigs.end()),
                              sorted_sigs.end());
            std::vector<int> new_cls(n);
            for (int v = 0; v < n; ++v)
                new_cls[v] = static_cast<int>(
                    std::lower_bound(sorted_sigs.begin(), sorted_sigs.end(), sig[v]) -
                    sorted_sigs.begin());
            const bool stable = (new_cls == cls);
            cls = new_cls;
            if (stable) break;
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> nb;
                for (int u = 0; u < n; ++u)
                    if (u != v && adj[v][u] > 0) nb.emplace_back(cls[u], adj[v][u]);
                std::sort(nb.begin(), nb.end());
                Sig s = {cls[v], loops[v]};
                for (auto [c, m] : nb) {
                    s.push_back(c);
                    s.push_back(m);
                }
                sig[v] = std::move(s);
            }
        }
    }

    std::vector<std::vector<int>> groups;
    {
        const int nc = n ? 1 + *std::max_element(cls.begin(), cls.end()) : 0;
        groups.resize(nc);
        for (int v = 0; v < n; ++v) groups[cls[v]].push_back(v);
    }

    // Search orderings within classes for the least sorted edge list.
    EdgeList best;
    bool have_best = false;
    std::vector<int> label(n);  // old vertex -> new 1-based label
    std::function<void(size_t, int)> rec = [&](size_t gi, int next_label) {
        if (gi == groups.size()) {
            EdgeList edges;
            edges.reserve(g.edges.size());
            for (auto [a, b] : g.edges) {
                int x = label[a - 1], y = label[b - 1];
                if (x > y) std::swap(x, y);
                edges.emplace_back(x, y);
            }
            std::sort(edges.begin(), edges.end());
            if (!have_best || edges < best) {
                best = std::move(edges);
                have_best = true;
            }
            return;
        }
        std::vector<int> order = groups[gi];
        std::sort(order.begin(), order.end());
        do {
            for (size_t i = 0; i < order.size(); ++i)
                label[order[i]] = next_label + static_cast<int>(i);
            rec(gi + 1, next_label + static_cast<int>(order.size()));
        } while (std::next_permutation(order.begin(), order.end()));
    };
    rec(0, 1);
    return MultiGraph{n, std::move(best)};
}

bool graph_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
    return canonical_multigraph(a) == canonical_multigraph(b);
}

MultiGraph circle_graph() { return MultiGraph{1, {{1, 1}}}; }

std::vector<std::vector<MultiGraph>> reduce_to_Cg(
    const std::vector<std::vector<RgEntry>>& r_lists) {
    using Key = std::pair<int, EdgeList>;
    std::set<Key> known;
    std::vector<std::vector<MultiGraph>> out;
    for (size_t g = 0; g < r_lists.size(); ++g) {
        std::vector<MultiGraph> classes;
        if (g == 0) {
            classes.push_back(circle_graph());
            known.emplace(1, classes.front().edges);
        } else {
            std::set<Key> this_genus;
            for (const auto& e : r_lists[g]) {
                MultiGraph cg = canonical_multigraph(graph_of_entry(e));
                Key key{cg.vertex_count, cg.edges};
                if (known.count(key) || !this_genus.insert(key).second) continue;
                classes.push_back(std::move(cg));
            }
            for (const auto& k : this_genus) known.insert(k);
            std::sort(classes.begin(), classes.end(),
                      [](const MultiGraph& a, const MultiGraph& b) {
                          return std::tie(a.vertex_count, a.edges) <
                                 std::tie(b.vertex_count, b.edges);
                      });
        }
        out.push_back(std::move(classes));
    }
    return out;
}

std::uint64_t count_Lg(const std::vector<std::uint64_t>& c_sizes) {
    if (c_sizes.empty()) throw std::invalid_argument("need |C_0|..|C_g|");
    const int g = static_cast<int>(c_sizes.size()) - 1;
    std::uint64_t total = 0;
    // tuples (k_0..k_g) with sum (i+1)*k_i = g+1
    std::vector<std::uint64_t> k(g + 1, 0);
    std::function<void(int, int, std::uint64_t)> rec = [&](int i, int rem, std::uint64_t prod) {
        if (i == g + 1) {
            if (rem == 0) total += prod;
            return;
        }
        for (std::uint64_t ki = 0; static_cast<int>(ki) * (i + 1) <= rem; ++ki)
            rec(i + 1, rem - static_cast<int>(ki) * (i + 1), prod * multichoose(c_sizes[i], ki));
    };
    rec(0, g + 1, 1);
    return total;
}

GenusTable build_table(const std::vector<std::uint64_t>& r_counts,
                       const std::vector<std::vector<MultiGraph>>& c_lists) {
    if (r_counts.size() != c_lists.size())
        throw std::invalid_argument("r and C inputs cover different genus ranges");
    GenusTable t;
    std::vector<std::uint64_t> c_sizes;
    for (size_t g = 0; g < r_counts.size(); ++g) {
        t.r.push_back(r_counts[g]);
        t.c.push_back(c_lists[g].size());
        c_sizes.push_back(c_lists[g].size());
        t.l.push_back(count_Lg(c_sizes));
        t.m.push_back(g == 0 ? 1 : t.m[g - 1] + t.l[g]);
    }
    return t;
}

}  // namespace minsep
