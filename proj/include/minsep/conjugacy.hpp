#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "minsep/partition.hpp"
#include "minsep/perm.hpp"

namespace minsep {

namespace detail {

inline std::uint64_t falling_factorial(int a, int b) {
    std::uint64_t r = 1;
    for (int i = 0; i < b; ++i) r *= static_cast<std::uint64_t>(a - i);
    return r;
}

/// Class size for a multiset of cycle lengths given as (len, mult)
/// pairs: (sum)! / prod(len^mult * mult!).
inline std::uint64_t class_count(const std::vector<std::pair<int, int>>& rem) {
    int sum = 0;
    std::uint64_t denom = 1;
    for (auto [l, m] : rem) {
        sum += l * m;
        for (int j = 0; j < m; ++j) denom *= static_cast<std::uint64_t>(l);
        for (int j = 2; j <= m; ++j) denom *= static_cast<std::uint64_t>(j);
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= sum; ++i) fact *= static_cast<std::uint64_t>(i);
    return fact / denom;
}

/// Streams permutations of a fixed cycle type in a fixed total order,
/// skipping the first `skip` and emitting at most `take`.
///
/// Order: the cycle containing the smallest unused point is chosen
/// first; its length is picked from the remaining distinct lengths in
/// descending order; the rest of the cycle is an ordered selection of
/// the remaining points, candidates taken in increasing point order.
/// Whole subtrees are skipped using exact subtree counts, so seeking
/// to any rank costs O(n^2) instead of enumerating predecessors.
template <class F>
class ClassStream {
public:
    ClassStream(const Partition& t, std::uint64_t skip, std::uint64_t take, F& f)
        : skip_(skip), take_(take), f_(f) {
        const int n = t.total();
        img_.resize(n);
        for (int i = 0; i < n; ++i) unused_.push_back(i);
        size_t i = 0;
        while (i < t.parts.size()) {
            int l = t.parts[i];
            int m = 0;
            while (i < t.parts.size() && t.parts[i] == l) {
                ++m;
                ++i;
            }
            rem_.emplace_back(l, m);
        }
        gen();
    }

private:
    std::uint64_t skip_;
    std::uint64_t take_;
    F& f_;
    std::vector<std::pair<int, int>> rem_;  // (len, mult), lens descending
    std::vector<int> unused_;               // ascending
    std::vector<int> img_;
    std::vector<int> cyc_;

    void gen() {
        if (take_ == 0) return;
        if (unused_.empty()) {
            if (skip_ > 0) {
                --skip_;
                return;
            }
            f_(img_);
            --take_;
            return;
        }
        const int u = static_cast<int>(unused_.size());
        for (size_t idx = 0; idx < rem_.size() && take_ > 0; ++idx) {
            if (rem_[idx].second == 0) continue;
            const int l = rem_[idx].first;
            --rem_[idx].second;
            const std::uint64_t sub = class_count_nonempty();
            ++rem_[idx].second;
            const std::uint64_t block = falling_factorial(u - 1, l - 1) * sub;
            if (skip_ >= block) {
                skip_ -= block;
                continue;
            }
            const int s = unused_.front();
            unused_.erase(unused_.begin());
            --rem_[idx].second;
            cyc_.push_back(s);
            extend_cycle(l - 1, sub);
            cyc_.pop_back();
            ++rem_[idx].second;
            unused_.insert(unused_.begin(), s);
        }
    }

    std::uint64_t class_count_nonempty() const {
        std::vector<std::pair<int, int>> r;
        for (auto [l, m] : rem_)
            if (m > 0) r.emplace_back(l, m);
        return class_count(r);
    }

    void extend_cycle(int picks_left, std::uint64_t sub) {
        if (picks_left == 0) {
            // close the cycle; hand gen() an empty cyc_ so the next
            // cycle starts fresh
            for (size_t j = 0; j + 1 < cyc_.size(); ++j) img_[cyc_[j]] = cyc_[j + 1];
            img_[cyc_.back()] = cyc_.front();
            std::vector<int> saved;
            saved.swap(cyc_);
            gen();
            cyc_ = std::move(saved);
            return;
        }
        const int u = static_cast<int>(unused_.size());
        const std::uint64_t per = falling_factorial(u - 1, picks_left - 1) * sub;
        for (int pos = 0; pos < u && take_ > 0; ++pos) {
            if (skip_ >= per) {
                skip_ -= per;
                continue;
            }
            const int c = unused_[pos];
            unused_.erase(unused_.begin() + pos);
            cyc_.push_back(c);
            extend_cycle(picks_left - 1, sub);
            cyc_.pop_back();
            unused_.insert(unused_.begin() + pos, c);
        }
    }
};

}  // namespace detail

/// Streams the permutations of cycle type t with ranks in [begin, end)
/// under the fixed total order. The callback receives the 0-based
/// image table (valid only for the duration of the call).
template <class F>
void for_each_in_class_images(const Partition& t, std::uint64_t begin, std::uint64_t end, F&& f) {
    const std::uint64_t total = class_size(t);
    if (begin > end || end > total) throw std::out_of_range("class rank range out of bounds");
    if (begin == end) return;
    detail::ClassStream<F> stream(t, begin, end - begin, f);
}

/// Convenience overload producing Perm values over the full class.
template <class F>
void for_each_in_class(const Partition& t, F&& f) {
    for_each_in_class_images(t, 0, class_size(t),
                             [&](const std::vector<int>& img) { f(Perm::from_images(img)); });
}

/// All permutations commuting with p. Count is prod(l^{m_l} * m_l!)
/// over the cycle lengths of p.
std::vector<Perm> centralizer_elements(const Perm& p);

/// Orbit closure: true iff the group generated acts transitively
/// on {1..n}.
bool is_transitive(std::span<const Perm> gens, int n);

}  // namespace minsep
