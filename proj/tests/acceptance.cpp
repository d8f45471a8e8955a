// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on
// any failure. The genus-4 long run is skipped unless the environment
// variable MINSEP_ACCEPT_LONG is set (hours-scale).
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minsep/char_count.hpp"
#include "minsep/conjugacy.hpp"
#include "minsep/enum_engine.hpp"
#include "minsep/graph_reduce.hpp"
#include "minsep/io.hpp"
#include "minsep/minsep_rules.hpp"
#include "minsep/verify.hpp"

using namespace minsep;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void skip(int number, const std::string& what, const std::string& why) {
    std::cout << "SKIP criterion " << number << ": " << what << " (" << why << ")" << std::endl;
}

std::vector<std::string> keys_for(int g) {
    std::vector<std::string> keys;
    const auto [lo, hi] = edge_bounds(g);
    for (int E = lo; E <= hi; ++E)
        for (const auto& tr : admissible_type_triples(g, E)) keys.push_back(tr.key());
    return keys;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool dirs_byte_identical(const fs::path& a, const fs::path& b, std::string& detail) {
    std::set<fs::path> names_a, names_b;
    for (const auto& e : fs::recursive_directory_iterator(a))
        if (e.is_regular_file()) names_a.insert(fs::relative(e.path(), a));
    for (const auto& e : fs::recursive_directory_iterator(b))
        if (e.is_regular_file()) names_b.insert(fs::relative(e.path(), b));
    if (names_a != names_b) {
        detail = "file sets differ";
        return false;
    }
    for (const auto& rel : names_a)
        if (slurp(a / rel) != slurp(b / rel)) {
            detail = "content differs in " + rel.string();
            return false;
        }
    return true;
}

bool key_sets_equal(const std::vector<Hypermap>& brute, const std::vector<RgEntry>& fast,
                    int max_e, std::string& detail) {
    std::set<std::string> bk, fk;
    for (const auto& h : brute) bk.insert(hypermap_class_key(h));
    for (const auto& e : fast)
        if (e.hypermap.brin_count <= max_e) fk.insert(hypermap_class_key(e.hypermap));
    if (bk != fk) {
        detail = "brute " + std::to_string(bk.size()) + " classes vs search " +
                 std::to_string(fk.size());
        return false;
    }
    return true;
}

}  // namespace

int main() {
    // ---- criteria 1 and 2: counts for g = 1..3 ----------------------
    std::vector<std::vector<RgEntry>> r_lists(4);
    for (int g = 1; g <= 3; ++g) r_lists[g] = enumerate_Rg(g);
    const std::vector<std::uint64_t> expect_r = {1, 3, 31, 1831};
    {
        bool ok = true;
        std::string detail;
        for (int g = 1; g <= 3; ++g)
            if (r_lists[g].size() != expect_r[g]) {
                ok = false;
                detail += "|R_" + std::to_string(g) + "|=" + std::to_string(r_lists[g].size()) + " ";
            }
        report(1, "|R_g| = 3, 31, 1831 for g = 1, 2, 3", ok, detail);
    }
    {
        const auto c_lists = reduce_to_Cg(r_lists);
        std::vector<std::uint64_t> r_counts;
        for (const auto& l : r_lists) r_counts.push_back(l.size());
        r_counts[0] = 1;
        const GenusTable t = build_table(r_counts, c_lists);
        const std::vector<std::uint64_t> ec = {1, 3, 17, 164}, el = {1, 4, 21, 191},
                                         em = {1, 5, 26, 217};
        const bool ok = t.c == ec && t.l == el && t.m == em;
        std::string detail;
        if (!ok)
            for (int g = 0; g <= 3; ++g)
                detail += "g" + std::to_string(g) + ":C=" + std::to_string(t.c[g]) +
                          ",L=" + std::to_string(t.l[g]) + ",M=" + std::to_string(t.m[g]) + " ";
        report(2, "(|C_g|,|L_g|,|M_g|) = (3,4,5), (17,21,26), (164,191,217)", ok, detail);
    }

    // ---- criterion 3: optional genus-4 long run ----------------------
    if (std::getenv("MINSEP_ACCEPT_LONG")) {
        EnumerateOptions opts;
        opts.workers = 8;
        const auto r4 = enumerate_Rg(4, opts);
        bool ok = r4.size() == 462638;
        std::string detail = "|R_4|=" + std::to_string(r4.size());
        if (ok) {
            std::vector<std::vector<RgEntry>> lists = r_lists;
            lists.push_back(r4);
            const auto c_lists = reduce_to_Cg(lists);
            const GenusTable t = build_table({1, 3, 31, 1831, 462638}, c_lists);
            ok = t.c[4] == 3096 && t.l[4] == 3338 && t.m[4] == 3555;
            detail += " C=" + std::to_string(t.c[4]) + " L=" + std::to_string(t.l[4]) +
                      " M=" + std::to_string(t.m[4]);
        }
        report(3, "genus-4 long run: 462638 / 3096 / 3338 / 3555", ok, detail);
    } else {
        skip(3, "genus-4 long run", "set MINSEP_ACCEPT_LONG=1 to enable");
    }

    // ---- criterion 4: brute-force oracle equivalence, E <= 6 ---------
    {
        bool ok = true;
        std::string detail;
        for (int g = 1; g <= 2 && ok; ++g)
            ok = key_sets_equal(brute_force_Rg(g, 6), r_lists[g], 6, detail);
        report(4, "brute force agrees with the search for E <= 6, g = 1, 2", ok, detail);
    }

    // ---- criterion 5: Frobenius cross-checks --------------------------
    {
        bool ok = true;
        std::string detail;
        // streamed pre-dedup candidate count per fixed sigma, every
        // admissible triple with E <= 7 (any genus can contribute)
        for (int g = 1; g <= 6 && ok; ++g) {
            const auto [lo, hi] = edge_bounds(g);
            for (int E = lo; E <= std::min(hi, 7) && ok; ++E)
                for (const auto& tr : admissible_type_triples(g, E)) {
                    const Perm sigma = canonical_of_type(tr.S);
                    std::uint64_t streamed = 0;
                    for_each_in_class(tr.A, [&](const Perm& alpha) {
                        if (cycle_type(inverse(compose(sigma, alpha))) == tr.F) ++streamed;
                    });
                    const BigInt expected =
                        frobenius_count({tr.S, tr.A, tr.F}) / BigInt(class_size(tr.S));
                    if (BigInt(streamed) != expected) {
                        ok = false;
                        detail = tr.key() + ": streamed " + std::to_string(streamed) +
                                 " vs " + expected.str();
                        break;
                    }
                }
        }
        // ten hand-picked class triples vs direct enumeration
        const std::vector<std::vector<Partition>> picks = {
            {{3}, {3}, {3}},
            {{3}, {2, 1}, {2, 1}},
            {{2, 1}, {2, 1}, {1, 1, 1}},
            {{2, 1}, {2, 1}, {3}},
            {{4}, {4}, {2, 2}},
            {{4}, {3, 1}, {4}},
            {{3, 1}, {3, 1}, {2, 2}},
            {{2, 2}, {2, 2}, {2, 2}},
            {{2, 1, 1}, {2, 1, 1}, {3, 1}},
            {{4}, {2, 2}, {3, 1}},
        };
        for (const auto& classes : picks) {
            if (!ok) break;
            BigInt direct = 0;
            for_each_in_class(classes[0], [&](const Perm& a) {
                for_each_in_class(classes[1], [&](const Perm& b) {
                    if (cycle_type(inverse(compose(a, b))) == classes[2]) ++direct;
                });
            });
            if (frobenius_count(classes) != direct) {
                ok = false;
                detail = "direct check failed for " + classes[0].to_string() + "/" +
                         classes[1].to_string() + "/" + classes[2].to_string();
            }
        }
        report(5, "Frobenius counts match streamed and direct enumeration", ok, detail);
    }

    // ---- criterion 6: structural property suites ----------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& r : verify::run_all(/*max_brins=*/5))
            if (!r.passed) {
                ok = false;
                detail += r.name + ": " + r.detail + "; ";
            }
        report(6, "structural suites (dual, Walsh, convention, degrees)", ok, detail);
    }

    // ---- criterion 7: determinism across worker counts ----------------
    {
        const fs::path base =
            fs::temp_directory_path() / ("minsep_accept_" + std::to_string(::getpid()));
        fs::remove_all(base);
        EnumerateOptions one, eight;
        one.workers = 1;
        eight.workers = 8;
        eight.chunk_size = 10'000;
        io::write_shards(base / "w1", 3, enumerate_Rg(3, one), keys_for(3));
        io::write_shards(base / "w8", 3, enumerate_Rg(3, eight), keys_for(3));
        std::string detail;
        const bool ok = dirs_byte_identical(base / "w1", base / "w8", detail);
        fs::remove_all(base);
        report(7, "1-worker and 8-worker genus-3 outputs are byte-identical", ok, detail);
    }

    if (failures == 0) {
        std::cout << "acceptance: all checks passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
