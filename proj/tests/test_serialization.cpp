#include "icol/constructions.hpp"
#include "icol/serialization.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>

using namespace icol;

TEST_CASE("sha256_hex known vectors")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("graph hash ignores the family tag but not the structure")
{
    Graph plain(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(graph_hash(plain) == graph_hash(complete_graph(4)));
    CHECK(graph_hash(complete_graph(4)) != graph_hash(hypercube_graph(2)));
    CHECK(graph_hash(Graph(3, {{0, 1}})) != graph_hash(Graph(2, {{0, 1}})));
    CHECK(graph_hash(complete_graph(4)).size() == 64);
}

TEST_CASE("graph JSON round trip keeps edges and family")
{
    for (const auto &g : {complete_graph(1), complete_graph(6), hypercube_graph(4)}) {
        auto text = write_graph_json(g);
        auto back = read_graph_json(text);
        CHECK(back == g);
        CHECK(back.family() == g.family());
        CHECK(write_graph_json(back) == text);
    }

    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testing::random_graph(rng, 1 + trial % 9, 0.4);
        auto back = read_graph_json(write_graph_json(g));
        CHECK(back == g);
        CHECK(back.family().kind == FamilyKind::generic);
    }
}

TEST_CASE("graph reader rejects malformed documents")
{
    auto reject = [](const char *text) { CHECK_THROWS_AS(read_graph_json(text), FormatError); };
    reject("not json");
    reject(R"({"format":"ic-coloring/1","vertices":2,"edges":[[0,1]]})");
    reject(R"({"format":"ic-graph/1","edges":[[0,1]]})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[1,1]]})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[1,0]]})");
    reject(R"({"format":"ic-graph/1","vertices":3,"edges":[[0,1],[0,1]]})");
    reject(R"({"format":"ic-graph/1","vertices":3,"edges":[[0,2],[0,1]]})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[0,2]]})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[0,1,2]]})");
    reject(R"({"format":"ic-graph/1","vertices":0,"edges":[]})");
    reject(R"({"format":"ic-graph/1","vertices":3,"edges":[[0,1]],"family":{"kind":"complete","param":3}})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[0,1]],"family":{"kind":"hypercube","param":2}})");
    reject(R"({"format":"ic-graph/1","vertices":2,"edges":[[0,1]],"family":{"kind":"torus","param":2}})");

    // no family tag is fine
    CHECK(read_graph_json(R"({"format":"ic-graph/1","vertices":2,"edges":[[0,1]]})") == complete_graph(2));
}

TEST_CASE("coloring JSON round trip and binding")
{
    for (unsigned n = 1; n <= 6; ++n) {
        auto q = build_hypercube_tower(n).result;
        auto text = write_coloring_json(q.graph, q.coloring);
        CHECK(read_coloring_json(text, q.graph) == q.coloring);
        auto doc = read_coloring_json(text);
        CHECK(doc.graph_hash == graph_hash(q.graph));
    }

    auto k4 = complete_graph(4);
    auto q2 = hypercube_graph(2);
    auto k4_text = write_coloring_json(k4, canonical_complete_coloring(2).coloring);
    CHECK_THROWS_AS(read_coloring_json(k4_text, q2), HashMismatch);

    // forged hash with the wrong number of colors
    auto forged = nlohmann::json::parse(k4_text);
    forged["colors"] = {1, 2, 3};
    CHECK_THROWS_AS(read_coloring_json(forged.dump(), k4), HashMismatch);

    CHECK_THROWS_AS(read_coloring_json(R"({"format":"ic-coloring/1","graph_hash":"x","t":2,"colors":[3]})"),
                    FormatError);
    CHECK_THROWS_AS(read_coloring_json(R"({"format":"ic-coloring/1","graph_hash":"x","t":0,"colors":[]})"),
                    FormatError);
    CHECK_THROWS_AS(read_coloring_json(R"({"format":"ic-coloring/1","t":1,"colors":[1]})"), FormatError);
}

TEST_CASE("DOT and CSV")
{
    auto k2 = complete_graph(2);
    EdgeColoring one(1, {1});
    CHECK(write_csv(k2, one) == "u,v,color\n0,1,1\n");
    auto dot = write_dot(k2, &one);
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("0 -- 1 [label=\"1\"];") != std::string::npos);
    CHECK(write_dot(k2).find("label") == std::string::npos);

    auto q2 = hypercube_graph(2);
    auto csv = write_csv(q2, dimension_coloring(2).coloring);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK_THROWS_AS(write_csv(q2, one), ColoringMismatch);
}

TEST_CASE("search stats JSON")
{
    SearchOutcome o;
    o.status = SearchStatus::infeasible;
    o.nodes = 42;
    o.elapsed_ms = 1.5;
    auto doc = nlohmann::json::parse(search_stats_json(o));
    CHECK(doc["nodes"] == 42);
    CHECK(doc["status"] == "infeasible");
    CHECK(doc["elapsed_ms"] == 1.5);
}

TEST_CASE("text files are written whole and read back")
{
    auto dir = std::filesystem::temp_directory_path() / "icol-serialization-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto path = dir / "g.json";
    write_text_file(path, write_graph_json(hypercube_graph(3)));
    CHECK(read_graph_json(read_text_file(path)) == hypercube_graph(3));
    write_text_file(path, "x");
    CHECK(read_text_file(path) == "x");
    CHECK_THROWS_AS(read_text_file(dir / "missing.json"), IoError);
    std::filesystem::remove_all(dir);
}
