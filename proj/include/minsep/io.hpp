#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "minsep/enum_engine.hpp"
#include "minsep/graph_reduce.hpp"
#include "minsep/map.hpp"

namespace minsep::io {

using ordered_json = nlohmann::ordered_json;

ordered_json hypermap_to_json(const Hypermap& h);
Hypermap hypermap_from_json(const nlohmann::json& j);

ordered_json map_to_json(const CombinatorialMap& m);
CombinatorialMap map_from_json(const nlohmann::json& j);

ordered_json entry_to_json(const RgEntry& e);
RgEntry entry_from_json(const nlohmann::json& j);

ordered_json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

/// Writes one JSONL shard per non-empty triple key under
/// <out>/g<genus>/ plus manifest.json listing keys, per-key counts and
/// the total. Entries must already be in deterministic order.
void write_shards(const std::filesystem::path& out, int genus,
                  const std::vector<RgEntry>& entries,
                  const std::vector<std::string>& all_keys);

/// Reads every shard named by the manifest back, in manifest order.
/// Throws std::runtime_error if the manifest is missing.
std::vector<RgEntry> read_shards(const std::filesystem::path& out, int genus);

/// Total count recorded in a genus's manifest.
std::uint64_t manifest_total(const std::filesystem::path& out, int genus);

void write_c_list(const std::filesystem::path& out, int genus,
                  const std::vector<MultiGraph>& graphs);
std::vector<MultiGraph> read_c_list(const std::filesystem::path& out, int genus);
bool c_list_exists(const std::filesystem::path& out, int genus);

/// CSV "genus,R,C,L,M".
void write_table_csv(const std::filesystem::path& file, const GenusTable& t);
std::string table_csv_string(const GenusTable& t);

}  // namespace minsep::io
