#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "minsep/char_count.hpp"
#include "minsep/enum_engine.hpp"
#include "minsep/graph_reduce.hpp"
#include "minsep/io.hpp"
#include "minsep/minsep_rules.hpp"
#include "minsep/verify.hpp"

namespace fs = std::filesystem;
using namespace minsep;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitMissingInput = 2;
constexpr int kExitResource = 3;

fs::path default_out() {
    if (const char* env = std::getenv("MINSEP_OUT")) return env;
    return "out";
}

/// The genus-0 base case: the circle, one vertex with one loop. Its
/// dual hypermap is the one-brin identity triple.
RgEntry circle_entry() {
    const Perm id1(1);
    return RgEntry{Hypermap{1, id1, id1, id1}, 0, 0, "circle"};
}

std::vector<std::string> all_triple_keys(int g, std::optional<int> edges) {
    std::vector<std::string> keys;
    const auto [lo, hi] = edge_bounds(g);
    for (int E = lo; E <= hi; ++E) {
        if (edges && *edges != E) continue;
        for (const auto& tr : admissible_type_triples(g, E)) keys.push_back(tr.key());
    }
    return keys;
}

int cmd_enumerate(int genus, std::optional<int> edges, int workers, std::uint64_t chunk_size,
                  const fs::path& out, bool allow_long) {
    if (genus == 0) {
        try {
            io::write_shards(out, 0, {circle_entry()}, {"circle"});
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitMissingInput;
        }
        std::cout << "|R_0| = 1\n";
        return 0;
    }
    if (genus >= 4 && !allow_long) {
        std::cerr << "error: genus " << genus
                  << " is an hours-scale run; pass --allow-long to proceed\n";
        return kExitMissingInput;
    }
    EnumerateOptions opts;
    opts.workers = workers;
    opts.chunk_size = chunk_size;
    opts.edges_filter = edges;
    try {
        const auto entries = enumerate_Rg(genus, opts);
        io::write_shards(out, genus, entries, all_triple_keys(genus, edges));
        std::cout << "|R_" << genus << "| = " << entries.size() << "\n";
    } catch (const CapacityError& e) {
        std::cerr << "capacity failure: " << e.triple_key << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingInput;
    }
    return 0;
}

int cmd_reduce(int genus, const fs::path& out) {
    std::vector<std::vector<RgEntry>> r_lists;
    for (int g = 0; g <= genus; ++g) {
        try {
            r_lists.push_back(io::read_shards(out, g));
        } catch (const std::exception& e) {
            std::cerr << "error: genus " << g << ": " << e.what() << "\n";
            return kExitMissingInput;
        }
    }
    const auto c_lists = reduce_to_Cg(r_lists);
    for (int g = 0; g <= genus; ++g) {
        io::write_c_list(out, g, c_lists[g]);
        std::cout << "|C_" << g << "| = " << c_lists[g].size() << "\n";
    }
    return 0;
}

int cmd_count(int genus, const fs::path& out) {
    std::vector<std::uint64_t> r_counts;
    std::vector<std::vector<MultiGraph>> c_lists;
    for (int g = 0; g <= genus; ++g) {
        try {
            r_counts.push_back(io::manifest_total(out, g));
            c_lists.push_back(io::read_c_list(out, g));
        } catch (const std::exception& e) {
            std::cerr << "error: genus " << g << ": " << e.what() << "\n";
            return kExitMissingInput;
        }
    }
    const GenusTable table = build_table(r_counts, c_lists);
    io::write_table_csv(out / "table.csv", table);
    std::cout << io::table_csv_string(table);
    return 0;
}

int cmd_estimate(int genus, std::optional<int> edges) {
    if (genus < 1) {
        std::cerr << "error: estimate needs genus >= 1\n";
        return kExitMissingInput;
    }
    BigInt running = 0;
    const auto [lo, hi] = edge_bounds(genus);
    for (int E = lo; E <= hi; ++E) {
        if (edges && *edges != E) continue;
        for (const auto& tr : admissible_type_triples(genus, E)) {
            const BigInt n = frobenius_count({tr.S, tr.A, tr.F});
            const BigInt est = capacity_estimate(tr);
            running += est;
            std::cout << tr.key() << " N=" << n << " estimate=" << est << " total=" << running
                      << "\n";
        }
    }
    return 0;
}

int cmd_verify(int max_brins) {
    bool all_ok = true;
    for (const auto& r : verify::run_all(max_brins)) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name;
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration of minimal separating set graphs on orientable surfaces"};
    app.require_subcommand(1);

    int genus = 1;
    std::optional<int> edges;
    int workers = 1;
    std::uint64_t chunk_size = 1'000'000;
    fs::path out = default_out();
    bool allow_long = false;
    int max_brins = 4;

    auto add_common = [&](CLI::App* cmd, bool with_run_flags) {
        cmd->add_option("--genus", genus, "surface genus")->required();
        cmd->add_option("--out", out, "output directory (default $MINSEP_OUT or ./out)");
        if (with_run_flags) {
            cmd->add_option("--edges", edges, "restrict to one edge count");
            cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
            cmd->add_option("--chunk-size", chunk_size, "class ranks per work unit");
            cmd->add_flag("--allow-long", allow_long, "permit hours-scale runs (genus >= 4)");
        }
    };

    auto* enumerate = app.add_subcommand("enumerate", "enumerate R_g and write shards");
    add_common(enumerate, true);
    auto* reduce = app.add_subcommand("reduce", "reduce R lists to C_g graph classes");
    add_common(reduce, false);
    auto* count = app.add_subcommand("count", "compute the R/C/L/M table");
    add_common(count, false);
    auto* estimate = app.add_subcommand("estimate", "per-triple Frobenius capacity estimates");
    estimate->add_option("--genus", genus, "surface genus")->required();
    estimate->add_option("--edges", edges, "restrict to one edge count");
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle property suites");
    verify_cmd->add_option("--max-brins", max_brins, "exhaustive sweep bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cmd_enumerate(genus, edges, workers, chunk_size, out, allow_long);
        if (reduce->parsed()) return cmd_reduce(genus, out);
        if (count->parsed()) return cmd_count(genus, out);
        if (estimate->parsed()) return cmd_estimate(genus, edges);
        if (verify_cmd->parsed()) return cmd_verify(max_brins);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingInput;
    }
    return 0;
}
