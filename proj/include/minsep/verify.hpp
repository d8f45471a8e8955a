#pragma once

#include <string>
#include <vector>

namespace minsep::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample on failure
};

/// Property suites wiring the independent oracles to the search path:
/// composition-convention fixtures, dual involution, Walsh round-trips,
/// Frobenius candidate-count cross-checks, dedup vs brute-force orbit
/// partition, emitted-graph structure, and brute_force_Rg agreement.
/// max_brins bounds the exhaustive sweeps (default 4 finishes in
/// seconds; 5-6 takes minutes).
std::vector<SuiteResult> run_all(int max_brins = 4);

}  // namespace minsep::verify
