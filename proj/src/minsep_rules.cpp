#include "minsep/minsep_rules.hpp"

#include <sstream>
#include <stdexcept>

namespace minsep {

std::string TypeTriple::key() const {
    std::ostringstream os;
    os << 'E' << edge_count << "_S" << S.to_string('-') << "_A" << A.to_string('-') << "_F"
       << F.to_string('-');
    return os.str();
}

std::pair<int, int> edge_bounds(int g) {
    if (g < 1) throw std::invalid_argument("genus 0 handled as special case");
    return {g + 1, 4 * g};
}

std::optional<int> minsep_genus(const Hypermap& h) {
    const auto f_type = cycle_type(h.phi);
    for (int part : f_type.parts)
        if (part == 1) return std::nullopt;
    const int cs = cycle_type(h.sigma).count();
    const int ca = cycle_type(h.alpha).count();
    return (h.brin_count - f_type.count() + cs + ca) / 2 - 1;
}

bool check_map_in_Rg(const CombinatorialMap& m, int g) {
    if (g < 1) throw std::invalid_argument("genus 0 handled as special case");
    const auto s_type = cycle_type(m.sigma);
    for (int part : s_type.parts)
        if (part == 2) return false;
    const int cs = s_type.count();
    const int ca = cycle_type(m.alpha).count();
    const int cf = cycle_type(m.phi).count();
    if (2 * (g + 1) != -cs + ca + cf) return false;
    return vertex_bipartition(dual(m)).has_value();
}

std::vector<TypeTriple> admissible_type_triples(int g, int E) {
    const auto [lo, hi] = edge_bounds(g);
    if (E < lo || E > hi) throw std::invalid_argument("edge count outside Lemma bounds");
    std::vector<TypeTriple> out;
    const auto all = partitions(E, 1);
    const auto no_ones = partitions(E, 2);
    for (const auto& S : all) {
        for (const auto& A : all) {
            if (S > A) continue;
            for (const auto& F : no_ones) {
                if (S.count() + A.count() + E - F.count() != 2 * g + 2) continue;
                if (S.count() + A.count() + F.count() > E + 2) continue;  // g_R >= 0
                out.push_back(TypeTriple{S, A, F, E});
            }
        }
    }
    return out;
}

}  // namespace minsep
