#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minsep {

/// A permutation of {1..n}, stored 0-based internally.
/// All public text I/O uses 1-based point labels.
class Perm {
public:
    Perm() = default;

    explicit Perm(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }

    /// Construct from a 0-based image table. Must be a bijection.
    static Perm from_images(std::vector<int> images);

    /// Construct from disjoint cycles given with 1-based labels.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    static Perm identity(int n) { return Perm(n); }

    int degree() const { return static_cast<int>(img_.size()); }

    /// Image of 0-based point i.
    int operator()(int i) const { return img_[i]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;

    friend bool operator==(const Perm&, const Perm&) = default;

    /// Lexicographic order on one-line image sequences.
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;

    friend Perm compose(const Perm&, const Perm&);
    friend Perm inverse(const Perm&);
    friend Perm conjugate(const Perm&, const Perm&);
};

/// compose(p, q)(x) = p(q(x)); q is applied first.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// conjugate(p, r) = r^-1 * p * r (same cycle type as p).
Perm conjugate(const Perm& p, const Perm& r);

/// Disjoint cycles, 1-based, each rotated so its minimum is first,
/// cycles sorted by minimum. Includes fixed points.
std::vector<std::vector<int>> cycles_of(const Perm& p);

/// Normalized cycle text: fixed points omitted, "()" for the identity.
std::string cycle_string(const Perm& p);

/// Parse cycle text as produced by cycle_string. Degree must be given
/// since fixed points are omitted.
Perm parse_cycles(int n, const std::string& text);

}  // namespace minsep
