#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minsep/map.hpp"
#include "minsep/minsep_rules.hpp"
#include "minsep/perm.hpp"

namespace minsep {

/// One representative of an isomorphism class (modulo color swap) of
/// duals of R_g elements.
struct RgEntry {
    Hypermap hypermap;
    int genus = 0;         // g
    int ribbon_genus = 0;  // g_R
    std::string triple_key;
};

/// A chunk of one triple's search: sigma is fixed to the canonical
/// representative of S; the streamed class is whichever of A and F is
/// smaller (ties toward A).
struct SearchTask {
    TypeTriple triple;
    bool iterate_alpha = true;
    std::uint64_t chunk_begin = 0;
    std::uint64_t chunk_end = 0;
};

/// Thrown when a triple's result store outgrows twice its
/// preallocation estimate.
struct CapacityError : std::runtime_error {
    std::string triple_key;
    explicit CapacityError(std::string key)
        : std::runtime_error("capacity exceeded for triple " + key), triple_key(std::move(key)) {}
};

/// "n|sigma|alpha|phi" in normalized cycle text; the deterministic
/// sort key for enumeration output.
std::string hypermap_text(const Hypermap& h);

/// Canonical-form predicate for fixed sigma = canonical_of_type(S):
/// accepts alpha iff no centralizer element of sigma conjugates it to
/// something lexicographically earlier, and (when swap_allowed) the
/// (sigma, alpha) encoding is no later than the color-swapped pair's
/// normalized encoding.
bool is_canonical(const Perm& sigma, const Perm& alpha, bool swap_allowed);
bool is_canonical(const Perm& sigma, const Perm& alpha, bool swap_allowed,
                  const std::vector<Perm>& sigma_centralizer);

/// Streams the task's chunk, filters, and returns accepted entries in
/// stream order. Results over a disjoint chunk partition are identical
/// to a single-chunk run.
std::vector<RgEntry> run_task(const SearchTask& t);

struct EnumerateOptions {
    int workers = 1;
    std::uint64_t chunk_size = 1'000'000;
    std::optional<int> edges_filter;  // restrict to one edge count
    bool enforce_capacity = true;     // CapacityError past 2x the estimate
};

/// The whole genus-g search, merged and sorted deterministically
/// (triple key order, then hypermap text). |result| = |R_g|.
std::vector<RgEntry> enumerate_Rg(int g, const EnumerateOptions& opts = {});

/// Independent oracle: full S_E x S_E sweep for every E <= max_E,
/// filtered by minsep genus and transitivity, partitioned into
/// isomorphism classes by exhaustive conjugation including color swap.
/// Refuses max_E > 7.
std::vector<Hypermap> brute_force_Rg(int g, int max_E);

/// Lexicographically least (sigma, alpha) image encoding over all
/// simultaneous conjugations and the color swap. Brute force; small
/// degrees only.
std::string hypermap_class_key(const Hypermap& h);

}  // namespace minsep
