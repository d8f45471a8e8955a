#include "minsep/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace minsep {

std::string Partition::to_string(char sep) const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << sep;
        os << parts[i];
    }
    return os.str();
}

Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    for (const auto& cyc : cycles_of(p)) lens.push_back(static_cast<int>(cyc.size()));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

Perm canonical_of_type(const Partition& t) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int l : t.parts) {
        std::vector<int> cyc(l);
        for (int i = 0; i < l; ++i) cyc[i] = next + i;
        next += l;
        cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(t.total(), cycles);
}

std::uint64_t centralizer_order(const Partition& t) {
    std::uint64_t z = 1;
    size_t i = 0;
    while (i < t.parts.size()) {
        int l = t.parts[i];
        std::uint64_t m = 0;
        while (i < t.parts.size() && t.parts[i] == l) {
            ++m;
            ++i;
        }
        for (std::uint64_t j = 0; j < m; ++j) z *= static_cast<std::uint64_t>(l);
        for (std::uint64_t j = 2; j <= m; ++j) z *= j;
    }
    return z;
}

std::uint64_t class_size(const Partition& t) {
    const int n = t.total();
    if (n > 20) throw std::invalid_argument("class_size: degree too large for 64-bit result");
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    return fact / centralizer_order(t);
}

std::vector<Partition> partitions(int n, int min_part) {
    if (n < 1 || min_part < 1) throw std::invalid_argument("partitions: bad arguments");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, max_part); p >= min_part; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace minsep
