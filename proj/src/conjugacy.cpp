#include "minsep/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace minsep {

std::vector<Perm> centralizer_elements(const Perm& p) {
    const int n = p.degree();
    // Group the cycles of p by length, keeping the by-minimum order
    // cycles_of provides within each group.
    auto cycles = cycles_of(p);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<std::vector<int>>> groups;
    for (auto& cyc : cycles) {
        if (groups.empty() || groups.back().front().size() != cyc.size())
            groups.emplace_back();
        groups.back().push_back(std::move(cyc));
    }

    std::vector<Perm> out;
    std::vector<int> img(n);

    // For each group: choose a permutation of its cycles and a rotation
    // offset per cycle. Such maps are exactly the centralizer.
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            out.push_back(Perm::from_images(img));
            return;
        }
        const auto& cycs = groups[gi];
        const int m = static_cast<int>(cycs.size());
        const int l = static_cast<int>(cycs.front().size());
        std::vector<int> pi(m);
        std::iota(pi.begin(), pi.end(), 0);
        do {
            std::vector<int> offs(m, 0);
            while (true) {
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < l; ++j)
                        img[cycs[i][j] - 1] = cycs[pi[i]][(j + offs[i]) % l] - 1;
                rec(gi + 1);
                int k = 0;
                while (k < m && ++offs[k] == l) offs[k++] = 0;
                if (k == m) break;
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    };
    rec(0);
    return out;
}

bool is_transitive(std::span<const Perm> gens, int n) {
    for (const Perm& g : gens)
        if (g.degree() != n) throw std::invalid_argument("degree mismatch");
    if (n <= 0) throw std::invalid_argument("degree must be positive");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) parent[a] = b;
        }
    const int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace minsep
