#include "minsep/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace minsep::io {

namespace fs = std::filesystem;

ordered_json hypermap_to_json(const Hypermap& h) {
    return ordered_json{{"n", h.brin_count},
                        {"sigma", cycle_string(h.sigma)},
                        {"alpha", cycle_string(h.alpha)},
                        {"phi", cycle_string(h.phi)}};
}

Hypermap hypermap_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    return Hypermap::create(parse_cycles(n, j.at("sigma").get<std::string>()),
                            parse_cycles(n, j.at("alpha").get<std::string>()),
                            parse_cycles(n, j.at("phi").get<std::string>()));
}

ordered_json map_to_json(const CombinatorialMap& m) {
    return ordered_json{{"n", m.edge_count},
                        {"sigma", cycle_string(m.sigma)},
                        {"alpha", cycle_string(m.alpha)},
                        {"phi", cycle_string(m.phi)}};
}

CombinatorialMap map_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    return CombinatorialMap::create(parse_cycles(2 * n, j.at("sigma").get<std::string>()),
                                    parse_cycles(2 * n, j.at("alpha").get<std::string>()),
                                    parse_cycles(2 * n, j.at("phi").get<std::string>()));
}

ordered_json entry_to_json(const RgEntry& e) {
    ordered_json j = hypermap_to_json(e.hypermap);
    j["g"] = e.genus;
    j["g_r"] = e.ribbon_genus;
    j["triple"] = e.triple_key;
    return j;
}

RgEntry entry_from_json(const nlohmann::json& j) {
    return RgEntry{hypermap_from_json(j), j.at("g").get<int>(), j.at("g_r").get<int>(),
                   j.at("triple").get<std::string>()};
}

ordered_json graph_to_json(const MultiGraph& g) {
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : g.edges) edges.push_back(ordered_json::array({a, b}));
    return ordered_json{{"vertices", g.vertex_count}, {"edges", edges}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
    MultiGraph g;
    g.vertex_count = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

static fs::path genus_dir(const fs::path& out, int genus) {
    return out / ("g" + std::to_string(genus));
}

void write_shards(const fs::path& out, int genus, const std::vector<RgEntry>& entries,
                  const std::vector<std::string>& all_keys) {
    const fs::path dir = genus_dir(out, genus);
    fs::create_directories(dir);
    std::map<std::string, std::vector<const RgEntry*>> by_key;
    for (const auto& key : all_keys) by_key[key];
    for (const auto& e : entries) by_key.at(e.triple_key).push_back(&e);

    ordered_json manifest;
    manifest["genus"] = genus;
    manifest["triples"] = ordered_json::array();
    std::uint64_t total = 0;
    for (const auto& key : all_keys) {
        const auto& list = by_key.at(key);
        if (!list.empty()) {
            std::ofstream f(dir / (key + ".jsonl"));
            if (!f) throw std::runtime_error("cannot write shard " + (dir / key).string());
            for (const RgEntry* e : list) f << entry_to_json(*e).dump() << '\n';
        }
        manifest["triples"].push_back(
            ordered_json{{"key", key}, {"count", list.size()}});
        total += list.size();
    }
    manifest["total"] = total;
    std::ofstream mf(dir / "manifest.json");
    if (!mf) throw std::runtime_error("cannot write manifest in " + dir.string());
    mf << manifest.dump(2) << '\n';
}

static nlohmann::json load_manifest(const fs::path& out, int genus) {
    const fs::path mpath = genus_dir(out, genus) / "manifest.json";
    std::ifstream f(mpath);
    if (!f) throw std::runtime_error("missing manifest for genus " + std::to_string(genus));
    nlohmann::json m;
    f >> m;
    return m;
}

std::vector<RgEntry> read_shards(const fs::path& out, int genus) {
    const auto manifest = load_manifest(out, genus);
    std::vector<RgEntry> entries;
    for (const auto& t : manifest.at("triples")) {
        if (t.at("count").get<std::uint64_t>() == 0) continue;
        const fs::path shard =
            genus_dir(out, genus) / (t.at("key").get<std::string>() + ".jsonl");
        std::ifstream f(shard);
        if (!f) throw std::runtime_error("missing shard " + shard.string());
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            entries.push_back(entry_from_json(nlohmann::json::parse(line)));
        }
    }
    return entries;
}

std::uint64_t manifest_total(const fs::path& out, int genus) {
    return load_manifest(out, genus).at("total").get<std::uint64_t>();
}

static fs::path c_path(const fs::path& out, int genus) {
    return out / ("c" + std::to_string(genus) + ".jsonl");
}

void write_c_list(const fs::path& out, int genus, const std::vector<MultiGraph>& graphs) {
    fs::create_directories(out);
    std::ofstream f(c_path(out, genus));
    if (!f) throw std::runtime_error("cannot write " + c_path(out, genus).string());
    for (const auto& g : graphs) f << graph_to_json(g).dump() << '\n';
}

std::vector<MultiGraph> read_c_list(const fs::path& out, int genus) {
    std::ifstream f(c_path(out, genus));
    if (!f) throw std::runtime_error("missing C file for genus " + std::to_string(genus));
    std::vector<MultiGraph> graphs;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        graphs.push_back(graph_from_json(nlohmann::json::parse(line)));
    }
    return graphs;
}

bool c_list_exists(const fs::path& out, int genus) { return fs::exists(c_path(out, genus)); }

std::string table_csv_string(const GenusTable& t) {
    std::ostringstream os;
    os << "genus,R,C,L,M\n";
    for (int g = 0; g <= t.max_genus(); ++g)
        os << g << ',' << t.r[g] << ',' << t.c[g] << ',' << t.l[g] << ',' << t.m[g] << '\n';
    return os.str();
}

void write_table_csv(const fs::path& file, const GenusTable& t) {
    std::ofstream f(file);
    if (!f) throw std::runtime_error("cannot write " + file.string());
    f << table_csv_string(t);
}

}  // namespace minsep::io
