#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "minsep/enum_engine.hpp"
#include "minsep/io.hpp"

using namespace minsep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("minsep_io_test_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("hypermap JSON round-trip") {
    const auto h = Hypermap::from_sigma_alpha(parse_cycles(4, "(1,2,3,4)"), parse_cycles(4, "(2,3)"));
    const auto j = io::hypermap_to_json(h);
    CHECK(j.at("n") == 4);
    CHECK(j.at("sigma") == "(1,2,3,4)");
    const Hypermap back = io::hypermap_from_json(j);
    CHECK(back.sigma == h.sigma);
    CHECK(back.alpha == h.alpha);
    CHECK(back.phi == h.phi);
}

TEST_CASE("entry and graph JSON round-trips") {
    const auto h = Hypermap::from_sigma_alpha(parse_cycles(2, "(1,2)"), Perm::identity(2));
    const RgEntry e{h, 1, 1, "E2_S1-1_A2_F2"};
    const RgEntry back = io::entry_from_json(io::entry_to_json(e));
    CHECK(back.genus == 1);
    CHECK(back.ribbon_genus == 1);
    CHECK(back.triple_key == e.triple_key);
    CHECK(hypermap_text(back.hypermap) == hypermap_text(h));

    MultiGraph g;
    g.vertex_count = 2;
    g.edges = {{1, 1}, {1, 2}};
    CHECK(io::graph_from_json(io::graph_to_json(g)) == g);
}

TEST_CASE("shards write and read back in order") {
    TempDir tmp;
    const auto entries = enumerate_Rg(1);
    REQUIRE(entries.size() == 3);
    std::vector<std::string> keys = {"E2_S1-1_A2_F2", "E3_S3_A3_F3", "E4_S4_A4_F2-2"};
    io::write_shards(tmp.path, 1, entries, keys);
    CHECK(fs::exists(tmp.path / "g1" / "manifest.json"));
    CHECK(fs::exists(tmp.path / "g1" / "E2_S1-1_A2_F2.jsonl"));
    CHECK(io::manifest_total(tmp.path, 1) == 3);
    const auto back = io::read_shards(tmp.path, 1);
    REQUIRE(back.size() == entries.size());
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(hypermap_text(back[i].hypermap) == hypermap_text(entries[i].hypermap));
        CHECK(back[i].triple_key == entries[i].triple_key);
    }
}

TEST_CASE("empty triples appear in the manifest but get no shard file") {
    TempDir tmp;
    const auto entries = enumerate_Rg(1);
    std::vector<std::string> keys = {"E2_S1-1_A2_F2", "E3_S3_A3_F3", "E4_S4_A4_F2-2", "E9_fake"};
    io::write_shards(tmp.path, 1, entries, keys);
    CHECK_FALSE(fs::exists(tmp.path / "g1" / "E9_fake.jsonl"));
    CHECK(io::manifest_total(tmp.path, 1) == 3);
    CHECK(io::read_shards(tmp.path, 1).size() == 3);
}

TEST_CASE("missing manifest raises") {
    TempDir tmp;
    CHECK_THROWS_AS(io::read_shards(tmp.path, 7), std::runtime_error);
    CHECK_THROWS_AS(io::manifest_total(tmp.path, 7), std::runtime_error);
}

TEST_CASE("C list round-trip and existence check") {
    TempDir tmp;
    MultiGraph g;
    g.vertex_count = 1;
    g.edges = {{1, 1}};
    CHECK_FALSE(io::c_list_exists(tmp.path, 0));
    io::write_c_list(tmp.path, 0, {g});
    CHECK(io::c_list_exists(tmp.path, 0));
    const auto back = io::read_c_list(tmp.path, 0);
    REQUIRE(back.size() == 1);
    CHECK(back[0] == g);
}

TEST_CASE("CSV table") {
    GenusTable t;
    t.r = {1, 3};
    t.c = {1, 3};
    t.l = {1, 4};
    t.m = {1, 5};
    CHECK(io::table_csv_string(t) == "genus,R,C,L,M\n0,1,1,1,1\n1,3,3,4,5\n");
    TempDir tmp;
    io::write_table_csv(tmp.path / "table.csv", t);
    std::ifstream f(tmp.path / "table.csv");
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(all == io::table_csv_string(t));
}
