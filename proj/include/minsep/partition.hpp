#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "minsep/perm.hpp"

namespace minsep {

/// Integer partition with parts in non-increasing order.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) {}
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int total() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    /// Number of parts; c(p) when this is a cycle type.
    int count() const { return static_cast<int>(parts.size()); }

    std::string to_string(char sep = ',') const;

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic on the descending part sequences, so [2] > [1,1].
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts <=> b.parts;
    }
};

Partition cycle_type(const Perm& p);

/// The permutation whose cycles are consecutive blocks of points in
/// part order: [l1,l2,...] gives (1..l1)(l1+1..l1+l2)...
Perm canonical_of_type(const Partition& t);

/// Number of permutations of degree t.total() with cycle type t:
/// n! / prod(l^{m_l} * m_l!). Fits in 64 bits for n <= 20.
std::uint64_t class_size(const Partition& t);

/// Order of the centralizer of any permutation of cycle type t:
/// prod(l^{m_l} * m_l!).
std::uint64_t centralizer_order(const Partition& t);

/// All partitions of n with every part >= min_part, in descending
/// lexicographic order.
std::vector<Partition> partitions(int n, int min_part = 1);

}  // namespace minsep
