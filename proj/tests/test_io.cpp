#include <gtest/gtest.h>

#include "kbasis/catalog.hpp"
#include "kbasis/io.hpp"

using namespace kb;

TEST(Io, GraphRoundTrip) {
    Graph g = generalized_petersen(5, 2);
    g.remove_edge(3);
    json j = graph_to_json(g);
    EXPECT_EQ(j["edges"][0], (json{{"id", 0}, {"u", 0}, {"v", 1}}));
    Graph back = graph_from_json(j);
    EXPECT_TRUE(back == g);
    EXPECT_EQ(graph_to_json(back).dump(), j.dump());
}

TEST(Io, GraphPairForm) {
    Graph g = graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0,1],[1,2],[2,0]]})"));
    EXPECT_EQ(g.m(), 3);
    EXPECT_EQ(g.edge(2).u, 2);
}

TEST(Io, MalformedInputs) {
    EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": [0,1]})")), InputError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": [0], "edges": [[0,4]]})")), InputError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": [0,0], "edges": []})")), InputError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": "x", "edges": []})")), InputError);
    Graph k = complete_graph(3);
    EXPECT_THROW(basis_from_json(k, json::parse("[[0,9]]")), InputError);
    EXPECT_THROW(basis_from_json(k, json::parse(R"({"a":1})")), InputError);
    EXPECT_THROW(embedding_from_json(json::parse(R"({"vertices": [0], "edges": []})")), InputError);
}

TEST(Io, BasisRoundTrip) {
    Graph g = entry_graph("K_{3,4}");
    Basis b = k34_example_basis();
    json j = basis_to_json(b);
    EXPECT_EQ(basis_from_json(g, j), b);
}

TEST(Io, EmbeddingRoundTrip) {
    for (auto& name : list_entries())
        for (auto& d : catalog_entry(name).drawings) {
            auto e = entry_embedding(name, d.figure);
            json j = embedding_to_json(e);
            ASSERT_TRUE(j.contains("rotations"));
            ASSERT_TRUE(j.contains("dummies"));
            auto back = embedding_from_json(j);
            EXPECT_TRUE(validate(back).empty()) << name;
            EXPECT_EQ(back.rotations(), e.rotations()) << name;
            EXPECT_EQ(embedding_to_json(back).dump(), j.dump()) << name;
        }
}

TEST(Io, ReportChargesAreDense) {
    Graph g = entry_graph("K_{3,4}");
    auto r = verify_kbasis(g, k34_example_basis(), 3);
    json j = report_to_json(r);
    ASSERT_TRUE(j["charges"].is_array());
    EXPECT_EQ(j["charges"].size(), 12u);
    EXPECT_EQ(j["max_charge"], 3);
    EXPECT_EQ(j["verdict"], true);
}

TEST(Io, FixtureChecksums) {
    EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
    for (auto& f : fixture_names()) {
        json doc = fixture_document(f);
        EXPECT_EQ(doc["checksum"], fixture_checksum(doc)) << f;
    }
}

namespace {
int count(const std::string& s, const std::string& pat) {
    int n = 0;
    for (size_t p = s.find(pat); p != std::string::npos; p = s.find(pat, p + 1)) ++n;
    return n;
}
}  // namespace

TEST(Io, DotExport) {
    Graph g = entry_graph("Petersen");
    EXPECT_EQ(count(graph_to_dot(g), " -- "), g.m());
    auto e = entry_embedding("K6", "fig:K6");
    std::string dot = embedding_to_dot(e);
    EXPECT_EQ(count(dot, " -- "), (int)e.segments().size());
    EXPECT_EQ(count(dot, "shape=box"), 3);
}
