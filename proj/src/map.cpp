#include "minsep/map.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "minsep/conjugacy.hpp"

namespace minsep {

namespace {

void check_product_identity(const Perm& sigma, const Perm& alpha, const Perm& phi) {
    if (!compose(sigma, compose(alpha, phi)).is_identity())
        throw std::invalid_argument("sigma*alpha*phi is not the identity");
}

/// Vertex index (0-based, by smallest contained point) for every point.
std::vector<int> vertex_of_point(const Perm& sigma) {
    std::vector<int> vid(sigma.degree(), -1);
    int v = 0;
    for (const auto& cyc : cycles_of(sigma)) {
        for (int pt : cyc) vid[pt - 1] = v;
        ++v;
    }
    return vid;
}

}  // namespace

CombinatorialMap CombinatorialMap::create(Perm sigma, Perm alpha, Perm phi) {
    const int deg = sigma.degree();
    if (alpha.degree() != deg || phi.degree() != deg)
        throw std::invalid_argument("degree mismatch");
    if (deg < 2 || deg % 2 != 0)
        throw std::invalid_argument("map degree must be a positive even number");
    for (int i = 0; i < deg; ++i) {
        if (alpha(i) == i) throw std::invalid_argument("alpha has a fixed point");
        if (alpha(alpha(i)) != i) throw std::invalid_argument("alpha is not an involution");
    }
    check_product_identity(sigma, alpha, phi);
    const std::array<Perm, 2> gens{sigma, alpha};
    if (!is_transitive(gens, deg))
        throw std::invalid_argument("<sigma, alpha> is not transitive");
    return CombinatorialMap{deg / 2, std::move(sigma), std::move(alpha), std::move(phi)};
}

CombinatorialMap CombinatorialMap::from_sigma_alpha(Perm sigma, Perm alpha) {
    Perm phi = inverse(compose(sigma, alpha));
    return create(std::move(sigma), std::move(alpha), std::move(phi));
}

Hypermap Hypermap::create(Perm sigma, Perm alpha, Perm phi) {
    const int n = sigma.degree();
    if (alpha.degree() != n || phi.degree() != n)
        throw std::invalid_argument("degree mismatch");
    if (n < 1) throw std::invalid_argument("hypermap needs at least one brin");
    check_product_identity(sigma, alpha, phi);
    const std::array<Perm, 3> gens{sigma, alpha, phi};
    if (!is_transitive(gens, n))
        throw std::invalid_argument("<sigma, alpha, phi> is not transitive");
    return Hypermap{n, std::move(sigma), std::move(alpha), std::move(phi)};
}

Hypermap Hypermap::from_sigma_alpha(Perm sigma, Perm alpha) {
    Perm phi = inverse(compose(sigma, alpha));
    return create(std::move(sigma), std::move(alpha), std::move(phi));
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

int map_genus(const CombinatorialMap& m) {
    const int v = cycle_type(m.sigma).count();
    const int e = cycle_type(m.alpha).count();
    const int f = cycle_type(m.phi).count();
    return (2 - v + e - f) / 2;
}

CombinatorialMap dual(const CombinatorialMap& m) {
    // Exchanges vertices and faces. Inverting both keeps the product
    // identity valid under the fixed composition convention; cycle
    // structure (and hence genus, bipartiteness) matches (phi,alpha,sigma).
    return CombinatorialMap{m.edge_count, inverse(m.phi), m.alpha, inverse(m.sigma)};
}

std::optional<std::vector<int>> vertex_bipartition(const CombinatorialMap& m) {
    const auto vid = vertex_of_point(m.sigma);
    const int nv = 1 + *std::max_element(vid.begin(), vid.end());
    std::vector<int> color(nv, -1);
    color[vid[0]] = 0;
    // The map is connected, so repeated sweeps over the alpha-pairs
    // settle every vertex; nv sweeps suffice.
    for (int pass = 0; pass < nv; ++pass) {
        bool changed = false;
        for (int i = 0; i < m.sigma.degree(); ++i) {
            const int a = vid[i], b = vid[m.alpha(i)];
            if (color[a] >= 0 && color[b] < 0) {
                color[b] = 1 - color[a];
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (int i = 0; i < m.sigma.degree(); ++i) {
        const int a = vid[i], b = vid[m.alpha(i)];
        if (color[a] < 0 || color[b] < 0 || color[a] == color[b]) return std::nullopt;
    }
    std::vector<int> point_color(m.sigma.degree());
    for (int i = 0; i < m.sigma.degree(); ++i) point_color[i] = color[vid[i]];
    return point_color;
}

bool face_two_colorable(const CombinatorialMap& m) {
    return vertex_bipartition(dual(m)).has_value();
}

int hypermap_genus(const Hypermap& h) {
    const int cs = cycle_type(h.sigma).count();
    const int ca = cycle_type(h.alpha).count();
    const int cf = cycle_type(h.phi).count();
    return (2 - cs - ca + h.brin_count - cf) / 2;
}

std::pair<CombinatorialMap, std::vector<int>> map_from_hypermap(const Hypermap& h) {
    const int n = h.brin_count;
    std::vector<int> img(2 * n);
    for (int i = 0; i < n; ++i) {
        img[2 * i] = 2 * h.sigma(i);          // black end 2i+1 -> 2*sigma(i)+1 (1-based)
        img[2 * i + 1] = 2 * h.alpha(i) + 1;  // white end 2i+2 -> 2*alpha(i)+2
    }
    Perm sigma = Perm::from_images(std::move(img));
    std::vector<int> ainv(2 * n);
    for (int i = 0; i < n; ++i) {
        ainv[2 * i] = 2 * i + 1;
        ainv[2 * i + 1] = 2 * i;
    }
    Perm alpha = Perm::from_images(std::move(ainv));
    auto map = CombinatorialMap::from_sigma_alpha(std::move(sigma), std::move(alpha));
    std::vector<int> coloring(2 * n);
    for (int i = 0; i < n; ++i) {
        coloring[2 * i] = 0;
        coloring[2 * i + 1] = 1;
    }
    return {std::move(map), std::move(coloring)};
}

Hypermap hypermap_from_map(const CombinatorialMap& m, const std::vector<int>& coloring) {
    const int deg = m.sigma.degree();
    const int n = m.edge_count;
    if (static_cast<int>(coloring.size()) != deg)
        throw std::invalid_argument("coloring size mismatch");
    for (int i = 0; i < deg; ++i) {
        if (coloring[i] != coloring[m.sigma(i)] || coloring[i] == coloring[m.alpha(i)])
            throw std::invalid_argument("not bipartite");
    }
    // Edge i is the alpha-pair whose minimum end is the i-th smallest
    // among all pair minima.
    std::vector<int> edge_of(deg, -1);
    int e = 0;
    for (int i = 0; i < deg; ++i) {
        if (edge_of[i] >= 0) continue;
        edge_of[i] = e;
        edge_of[m.alpha(i)] = e;
        ++e;
    }
    std::vector<int> black_end(n), white_end(n);
    for (int i = 0; i < deg; ++i) {
        if (coloring[i] == 0)
            black_end[edge_of[i]] = i;
        else
            white_end[edge_of[i]] = i;
    }
    std::vector<int> sbar(n), abar(n);
    for (int i = 0; i < n; ++i) {
        sbar[i] = edge_of[m.sigma(black_end[i])];
        abar[i] = edge_of[m.sigma(white_end[i])];
    }
    Perm hs = Perm::from_images(std::move(sbar));
    Perm ha = Perm::from_images(std::move(abar));
    return Hypermap::from_sigma_alpha(std::move(hs), std::move(ha));
}

MultiGraph underlying_multigraph(const CombinatorialMap& m) {
    const auto vid = vertex_of_point(m.sigma);
    MultiGraph g;
    g.vertex_count = 1 + *std::max_element(vid.begin(), vid.end());
    for (int i = 0; i < m.sigma.degree(); ++i) {
        const int j = m.alpha(i);
        if (i < j) {
            int a = vid[i] + 1, b = vid[j] + 1;
            if (a > b) std::swap(a, b);
            g.edges.emplace_back(a, b);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace minsep
