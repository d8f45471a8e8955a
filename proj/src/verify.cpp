#include "minsep/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "minsep/char_count.hpp"
#include "minsep/conjugacy.hpp"
#include "minsep/enum_engine.hpp"
#include "minsep/graph_reduce.hpp"
#include "minsep/io.hpp"
#include "minsep/map.hpp"
#include "minsep/minsep_rules.hpp"

namespace minsep::verify {

namespace {

using Suite = SuiteResult (*)(int);

SuiteResult pass(std::string name) { return {std::move(name), true, {}}; }
SuiteResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

/// Fixed reference data: a planar map and a spherical hypermap with
/// known sigma, alpha, phi. Pins the composition convention.
SuiteResult composition_convention(int) {
    const std::string name = "composition-convention";
    const Perm sigma = parse_cycles(10, "(1,3,5)(4,8,6)(2,7,10,9)");
    const Perm alpha = parse_cycles(10, "(1,2)(3,4)(5,6)(7,8)(9,10)");
    const Perm phi_expected = parse_cycles(10, "(1,6,7)(2,10,8,3)(4,5)");
    if (inverse(compose(sigma, alpha)) != phi_expected)
        return fail(name, "map fixture: derived phi " +
                              cycle_string(inverse(compose(sigma, alpha))));
    const auto m = CombinatorialMap::from_sigma_alpha(sigma, alpha);
    if (map_genus(m) != 0) return fail(name, "map fixture: genus != 0");

    const Perm hs = parse_cycles(4, "(1,2,3,4)");
    const Perm ha = parse_cycles(4, "(2,3)");
    const Perm hphi_expected = parse_cycles(4, "(1,4,2)");
    if (inverse(compose(hs, ha)) != hphi_expected)
        return fail(name, "hypermap fixture: derived phi " +
                              cycle_string(inverse(compose(hs, ha))));
    const auto h = Hypermap::from_sigma_alpha(hs, ha);
    if (hypermap_genus(h) != 0) return fail(name, "hypermap fixture: genus != 0");

    // Walsh image of the fixture must be isomorphic to the drawn map
    // (sigma=(1,2,3,4)(6,7), alpha=(1,5)(2,6)(3,7)(4,8)).
    const auto [bip, coloring] = map_from_hypermap(h);
    const Perm ref_sigma = parse_cycles(8, "(1,2,3,4)(6,7)");
    const Perm ref_alpha = parse_cycles(8, "(1,5)(2,6)(3,7)(4,8)");
    std::vector<int> rho(8);
    std::iota(rho.begin(), rho.end(), 0);
    bool iso = false;
    do {
        const Perm r = Perm::from_images(rho);
        if (conjugate(bip.sigma, r) == ref_sigma && conjugate(bip.alpha, r) == ref_alpha) {
            iso = true;
            break;
        }
    } while (std::next_permutation(rho.begin(), rho.end()));
    if (!iso) return fail(name, "Walsh image not isomorphic to reference bipartite map");
    return pass(name);
}

/// All fixed-point-free involutions on 2n points.
std::vector<Perm> involutions(int deg) {
    std::vector<Perm> out;
    std::vector<int> img(deg, -1);
    std::function<void(int)> rec = [&](int i) {
        while (i < deg && img[i] >= 0) ++i;
        if (i == deg) {
            out.push_back(Perm::from_images(img));
            return;
        }
        for (int j = i + 1; j < deg; ++j) {
            if (img[j] >= 0) continue;
            img[i] = j;
            img[j] = i;
            rec(i + 1);
            img[i] = img[j] = -1;
        }
    };
    rec(0);
    return out;
}

Perm canonical_involution(int deg) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; i += 2) {
        img[i] = i + 1;
        img[i + 1] = i;
    }
    return Perm::from_images(img);
}

template <class F>
void for_each_valid_map(int n_edges, bool all_involutions, F&& f) {
    const int deg = 2 * n_edges;
    std::vector<Perm> alphas =
        all_involutions ? involutions(deg) : std::vector<Perm>{canonical_involution(deg)};
    std::vector<int> simg(deg);
    std::iota(simg.begin(), simg.end(), 0);
    do {
        const Perm sigma = Perm::from_images(simg);
        for (const Perm& alpha : alphas) {
            const std::array<Perm, 2> gens{sigma, alpha};
            if (!is_transitive(gens, deg)) continue;
            f(CombinatorialMap::from_sigma_alpha(sigma, alpha));
        }
    } while (std::next_permutation(simg.begin(), simg.end()));
}

SuiteResult dual_involution(int max_brins) {
    const std::string name = "dual-involution";
    // Full (sigma, alpha) sweep at n <= 2; canonical alpha (every map is
    // a relabeling of one of these) up to n = max_brins.
    std::string bad;
    auto check = [&](const CombinatorialMap& m) {
        const auto d = dual(m);
        if (map_genus(d) != map_genus(m) || d.edge_count != m.edge_count ||
            dual(d).sigma != m.sigma || dual(d).alpha != m.alpha || dual(d).phi != m.phi) {
            if (bad.empty()) bad = "sigma=" + cycle_string(m.sigma) + " alpha=" + cycle_string(m.alpha);
        }
        const int euler = cycle_type(m.sigma).count() - cycle_type(m.alpha).count() +
                          cycle_type(m.phi).count();
        if ((euler % 2 != 0 || map_genus(m) < 0) && bad.empty())
            bad = "euler parity: sigma=" + cycle_string(m.sigma);
    };
    for (int n = 1; n <= 2; ++n) for_each_valid_map(n, true, check);
    for (int n = 3; n <= std::max(3, max_brins); ++n) for_each_valid_map(n, false, check);
    return bad.empty() ? pass(name) : fail(name, bad);
}

template <class F>
void for_each_hypermap(int n, F&& f) {
    std::vector<int> simg(n);
    std::iota(simg.begin(), simg.end(), 0);
    do {
        std::vector<int> aimg(n);
        std::iota(aimg.begin(), aimg.end(), 0);
        do {
            const Perm sigma = Perm::from_images(simg);
            const Perm alpha = Perm::from_images(aimg);
            const Perm phi = inverse(compose(sigma, alpha));
            const std::array<Perm, 3> gens{sigma, alpha, phi};
            if (!is_transitive(gens, n)) continue;
            f(Hypermap{n, sigma, alpha, phi});
        } while (std::next_permutation(aimg.begin(), aimg.end()));
    } while (std::next_permutation(simg.begin(), simg.end()));
}

SuiteResult walsh_roundtrip(int max_brins) {
    const std::string name = "walsh-roundtrip";
    std::string bad;
    for (int n = 1; n <= std::min(4, max_brins); ++n) {
        for_each_hypermap(n, [&](const Hypermap& h) {
            if (!bad.empty()) return;
            const auto [m, coloring] = map_from_hypermap(h);
            const Hypermap back = hypermap_from_map(m, coloring);
            if (back.sigma != h.sigma || back.alpha != h.alpha || back.phi != h.phi) {
                bad = "roundtrip: " + hypermap_text(h);
                return;
            }
            if (hypermap_genus(h) != map_genus(m)) {
                bad = "genus: " + hypermap_text(h);
                return;
            }
            // phi' cycles are the phi-bar cycles with doubled lengths
            auto a = cycle_type(m.phi).parts;
            auto b = cycle_type(h.phi).parts;
            for (int& x : b) x *= 2;
            if (a != b) bad = "phi cycle doubling: " + hypermap_text(h);
            // swapped coloring swaps sigma-bar and alpha-bar
            std::vector<int> swapped(coloring.size());
            for (size_t i = 0; i < coloring.size(); ++i) swapped[i] = 1 - coloring[i];
            const Hypermap sw = hypermap_from_map(m, swapped);
            if (sw.sigma != h.alpha || sw.alpha != h.sigma)
                bad = "color swap: " + hypermap_text(h);
        });
    }
    return bad.empty() ? pass(name) : fail(name, bad);
}

SuiteResult frobenius_crosscheck(int max_brins) {
    const std::string name = "frobenius-crosscheck";
    // Streamed candidate counts per fixed sigma vs N(S,A,F)/|S|.
    const int cap = std::max(6, max_brins);
    for (int g = 1; g <= 3; ++g) {
        const auto [lo, hi] = edge_bounds(g);
        for (int E = lo; E <= std::min(hi, cap); ++E) {
            for (const auto& tr : admissible_type_triples(g, E)) {
                const Perm sigma = canonical_of_type(tr.S);
                std::uint64_t streamed = 0;
                for_each_in_class(tr.A, [&](const Perm& alpha) {
                    if (cycle_type(inverse(compose(sigma, alpha))) == tr.F) ++streamed;
                });
                const BigInt expected =
                    frobenius_count({tr.S, tr.A, tr.F}) / BigInt(class_size(tr.S));
                if (BigInt(streamed) != expected)
                    return fail(name, tr.key() + ": streamed " + std::to_string(streamed) +
                                          " expected " + expected.str());
            }
        }
    }
    // Direct enumeration over small symmetric groups.
    for (int n : {3, 4}) {
        const auto parts = partitions(n, 1);
        for (const auto& c1 : parts)
            for (const auto& c2 : parts)
                for (const auto& c3 : parts) {
                    std::uint64_t direct = 0;
                    for_each_in_class(c1, [&](const Perm& a) {
                        for_each_in_class(c2, [&](const Perm& b) {
                            // a*b*c = id  =>  c = (a*b)^-1; count when c in class c3
                            if (cycle_type(inverse(compose(a, b))) == c3) ++direct;
                        });
                    });
                    if (frobenius_count({c1, c2, c3}) != BigInt(direct))
                        return fail(name, "S_" + std::to_string(n) + " classes " +
                                              c1.to_string() + "/" + c2.to_string() + "/" +
                                              c3.to_string());
                }
    }
    return pass(name);
}

SuiteResult dedup_oracle(int max_brins) {
    const std::string name = "dedup-oracle";
    const int cap = std::min(5, std::max(3, max_brins));
    for (int g = 1; g <= 4; ++g) {
        const auto [lo, hi] = edge_bounds(g);
        for (int E = lo; E <= std::min(hi, cap); ++E) {
            for (const auto& tr : admissible_type_triples(g, E)) {
                const Perm sigma = canonical_of_type(tr.S);
                // every candidate surviving type + transitivity
                std::map<std::string, std::vector<Perm>> orbits;
                for_each_in_class(tr.A, [&](const Perm& alpha) {
                    const Perm phi = inverse(compose(sigma, alpha));
                    if (cycle_type(phi) != tr.F) return;
                    const std::array<Perm, 2> gens{sigma, alpha};
                    if (!is_transitive(gens, E)) return;
                    orbits[hypermap_class_key(Hypermap{E, sigma, alpha, phi})].push_back(alpha);
                });
                const SearchTask task{tr, true, 0, class_size(tr.A)};
                const auto accepted = run_task(task);
                if (accepted.size() != orbits.size())
                    return fail(name, tr.key() + ": accepted " +
                                          std::to_string(accepted.size()) + " classes, oracle " +
                                          std::to_string(orbits.size()));
                std::set<std::string> keys;
                for (const auto& e : accepted)
                    keys.insert(hypermap_class_key(e.hypermap));
                if (keys.size() != accepted.size())
                    return fail(name, tr.key() + ": duplicate isomorphism class accepted");
                for (const auto& [key, members] : orbits)
                    if (!keys.count(key))
                        return fail(name, tr.key() + ": missing class " +
                                              cycle_string(members.front()));
            }
        }
    }
    return pass(name);
}

SuiteResult emitted_structure(int) {
    const std::string name = "emitted-structure";
    for (int g = 1; g <= 2; ++g) {
        for (const auto& e : enumerate_Rg(g)) {
            const auto [bip, coloring] = map_from_hypermap(e.hypermap);
            if (!check_map_in_Rg(dual(bip), g))
                return fail(name, "entry fails R_g check: " + hypermap_text(e.hypermap));
            const MultiGraph graph = graph_of_entry(e);
            for (int v = 1; v <= graph.vertex_count; ++v) {
                const int d = graph.degree(v);
                if (d < 4 || d % 2 != 0)
                    return fail(name, "bad degree " + std::to_string(d) + " in " +
                                          hypermap_text(e.hypermap));
            }
            const auto mg = minsep_genus(e.hypermap);
            if (!mg || *mg != g || hypermap_genus(e.hypermap) != e.ribbon_genus)
                return fail(name, "genus mismatch: " + hypermap_text(e.hypermap));
        }
    }
    return pass(name);
}

SuiteResult brute_vs_enumerate(int max_brins) {
    const std::string name = "brute-vs-enumerate";
    const int cap = std::min(6, std::max(2, max_brins));
    for (int g = 1; g <= 2; ++g) {
        std::set<std::string> brute;
        for (const auto& h : brute_force_Rg(g, cap)) brute.insert(hypermap_class_key(h));
        std::set<std::string> fast;
        for (const auto& e : enumerate_Rg(g))
            if (e.hypermap.brin_count <= cap) fast.insert(hypermap_class_key(e.hypermap));
        if (brute != fast)
            return fail(name, "g=" + std::to_string(g) + ": brute " +
                                  std::to_string(brute.size()) + " classes, search " +
                                  std::to_string(fast.size()));
    }
    return pass(name);
}

}  // namespace

std::vector<SuiteResult> run_all(int max_brins) {
    const std::vector<std::pair<std::string, Suite>> suites = {
        {"composition-convention", composition_convention},
        {"dual-involution", dual_involution},
        {"walsh-roundtrip", walsh_roundtrip},
        {"frobenius-crosscheck", frobenius_crosscheck},
        {"dedup-oracle", dedup_oracle},
        {"emitted-structure", emitted_structure},
        {"brute-vs-enumerate", brute_vs_enumerate},
    };
    std::vector<SuiteResult> results;
    for (const auto& [unused, suite] : suites) results.push_back(suite(max_brins));
    return results;
}

}  // namespace minsep::verify
