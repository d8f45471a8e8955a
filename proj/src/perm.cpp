#include "minsep/perm.hpp"

#include <algorithm>
#include <sstream>

namespace minsep {

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p(n);
    std::vector<char> seen(n, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i] - 1;
            int b = cyc[(i + 1) % cyc.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("cycle label out of range");
            if (seen[a]) throw std::invalid_argument("repeated point in cycles");
            seen[a] = 1;
            p.img_[a] = b;
        }
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
    Perm r;
    r.img_.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r;
    r.img_.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img_[p.img_[i]] = i;
    return r;
}

Perm conjugate(const Perm& p, const Perm& r) {
    if (p.degree() != r.degree()) throw std::invalid_argument("degree mismatch");
    // (r^-1 p r)(x) = r^-1(p(r(x)))
    Perm inv = inverse(r);
    Perm out;
    out.img_.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) out.img_[i] = inv.img_[p.img_[r.img_[i]]];
    return out;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j + 1);
            j = p(j);
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string cycle_string(const Perm& p) {
    std::ostringstream os;
    bool any = false;
    for (const auto& cyc : cycles_of(p)) {
        if (cyc.size() == 1) continue;
        any = true;
        os << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ',';
            os << cyc[i];
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Perm parse_cycles(int n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '('");
        ++i;
        std::vector<int> cyc;
        while (i < text.size() && text[i] != ')') {
            size_t end;
            int v = std::stoi(text.substr(i), &end);
            cyc.push_back(v);
            i += end;
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
        ++i;  // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(n, cycles);
}

}  // namespace minsep
