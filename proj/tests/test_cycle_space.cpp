#include <gtest/gtest.h>

#include <random>

#include "kbasis/catalog.hpp"
#include "kbasis/cycle_space.hpp"
#include "support.hpp"

using namespace kb;

namespace {

EdgeSet set_of(const Graph& g, std::vector<EdgeId> ids) { return EdgeSet::of(g.edge_bound(), ids); }

EdgeSet k34_cycle(std::vector<int> labels) {
    EdgeSet s(12);
    for (size_t i = 0; i < labels.size(); ++i) s.flip(k34_edge(labels[i], labels[(i + 1) % labels.size()]));
    return s;
}

EdgeSet random_span_element(std::mt19937& rng, const std::vector<EdgeSet>& basis, int width) {
    EdgeSet s(width);
    for (auto& b : basis)
        if (rng() & 1) s ^= b;
    return s;
}

}  // namespace

TEST(CycleSpace, EulerianExamples) {
    Graph g(2);
    EdgeId e = g.add_edge(0, 1);
    EdgeId l = g.add_edge(1, 1);
    EXPECT_TRUE(is_eulerian(g, EdgeSet(g.edge_bound())));
    EXPECT_FALSE(is_eulerian(g, set_of(g, {e})));
    EXPECT_TRUE(is_eulerian(g, set_of(g, {l})));
    EXPECT_THROW(is_eulerian(g, set_of(g, {5})), ForeignEdge);
}

TEST(CycleSpace, EulerianClosure) {
    std::mt19937 rng(1);
    for (int it = 0; it < 200; ++it) {
        Graph g = kbtest::random_connected_graph(rng, 3 + it % 5, 0.4);
        while (g.m() > 10) g.remove_edge(g.edges().back().id);
        auto fc = fundamental_cycles(g, spanning_forest(g));
        EdgeSet s = random_span_element(rng, fc, g.edge_bound());
        EdgeSet t = random_span_element(rng, fc, g.edge_bound());
        EXPECT_TRUE(is_eulerian(g, s ^ t));
    }
}

TEST(CycleSpace, FundamentalCyclesExamples) {
    Graph c = cycle_graph(5);
    auto fc = fundamental_cycles(c, spanning_forest(c));
    ASSERT_EQ(fc.size(), 1u);
    EXPECT_EQ(fc[0].count(), 5);

    Graph g(2);
    g.add_edge(0, 1);
    EdgeId l = g.add_edge(0, 0);
    auto fl = fundamental_cycles(g, spanning_forest(g));
    ASSERT_EQ(fl.size(), 1u);
    EXPECT_EQ(fl[0], set_of(g, {l}));

    Graph k34 = complete_bipartite(3, 4);
    // vertex ids follow the 1..7 labels minus one; evens are one side
    (void)k34;
    Graph kg = entry_graph("K_{3,4}");
    auto f = forest_from_edges(kg, k34_example_tree());
    auto cycles = fundamental_cycles(kg, f);
    EXPECT_EQ((int)cycles.size(), betti(kg));
    EdgeId chord = k34_edge(4, 5);
    bool found = false;
    for (auto& cyc : cycles)
        if (cyc.test(chord)) {
            EXPECT_EQ(cyc, k34_cycle({1, 4, 5, 6}));
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(CycleSpace, FundamentalCyclesRankAndEuler) {
    std::mt19937 rng(2);
    for (int it = 0; it < 100; ++it) {
        Graph g = kbtest::random_connected_graph(rng, 2 + it % 10, 0.3);
        auto f = spanning_forest(g);
        auto fc = fundamental_cycles(g, f);
        EXPECT_EQ(rank(fc), betti(g));
        int longest = 0;
        for (auto& e : g.edges())
            if (!f.contains(e.id)) longest = std::max(longest, (int)f.path(e.u, e.v).size());
        for (auto& s : fc) {
            EXPECT_TRUE(is_eulerian(g, s));
            EXPECT_LE(s.count(), longest + 1);
        }
    }
}

TEST(CycleSpace, RankExamples) {
    EXPECT_EQ(rank({}), 0);
    EdgeSet a = EdgeSet::of(8, {0, 1}), b = EdgeSet::of(8, {1, 2});
    EXPECT_EQ(rank({a, b, a ^ b}), 2);
    std::vector<EdgeSet> all;
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<EdgeId> ids;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) ids.push_back(i);
        all.push_back(EdgeSet::of(3, ids));
    }
    EXPECT_EQ(rank(all), 3);
}

TEST(CycleSpace, EdgeSetWidthsCompareAsPadded) {
    EdgeSet a = EdgeSet::of(3, {1});
    EdgeSet b = EdgeSet::of(200, {1});
    EXPECT_EQ(a, b);
    EXPECT_TRUE((a ^ b).empty());
    EXPECT_TRUE(EdgeSet::of(8, {0, 5}) < EdgeSet::of(8, {1}));
}

TEST(CycleSpace, VerifyKBasisExample1) {
    Graph g = entry_graph("K_{3,4}");
    Basis b = k34_example_basis();
    auto r3 = verify_kbasis(g, b, 3);
    EXPECT_TRUE(r3.verdict);
    EXPECT_EQ(r3.dimension, 6);
    EXPECT_EQ(r3.max_charge, 3);
    auto r2 = verify_kbasis(g, b, 2);
    EXPECT_FALSE(r2.verdict);
    EXPECT_TRUE(r2.independent);
    EXPECT_TRUE(r2.generates);
    EXPECT_EQ((int)r2.charge.size(), g.edge_bound());
    EXPECT_THROW(verify_kbasis(g, {EdgeSet::of(40, {39})}, 3), ForeignEdge);
}

TEST(CycleSpace, VerifyKBasisReportsEachFailure) {
    Graph k = complete_graph(4);
    auto fc = fundamental_cycles(k, spanning_forest(k));
    auto dup = fc;
    dup.push_back(fc[0] ^ fc[1]);
    auto r = verify_kbasis(k, dup, 10);
    EXPECT_FALSE(r.independent);
    EXPECT_TRUE(r.generates);
    EXPECT_FALSE(r.verdict);
    auto r2 = verify_kbasis(k, {fc[0], fc[1]}, 10);
    EXPECT_TRUE(r2.independent);
    EXPECT_FALSE(r2.generates);
    auto r3 = verify_kbasis(k, {fc[0], fc[1], EdgeSet::of(6, {0})}, 10);
    EXPECT_FALSE(r3.all_eulerian);
    auto r4 = verify_kbasis(Graph(3), {}, 0);
    EXPECT_TRUE(r4.verdict);
    EXPECT_EQ(r4.max_charge, 0);
}

TEST(CycleSpace, DecomposeExample1) {
    Basis b = k34_example_basis();
    auto r = decompose(k34_cycle({1, 4, 5, 6}), b);
    ASSERT_TRUE(std::holds_alternative<std::vector<int>>(r));
    // the five quoted cycles are the first five elements
    EXPECT_EQ(std::get<std::vector<int>>(r), (std::vector<int>{0, 1, 2, 3, 4}));
    auto s = decompose(b[3], b);
    ASSERT_TRUE(std::holds_alternative<std::vector<int>>(s));
    EXPECT_EQ(std::get<std::vector<int>>(s), (std::vector<int>{3}));
    EXPECT_TRUE(std::holds_alternative<NotInSpan>(decompose(EdgeSet::of(12, {0}), b)));
}

TEST(CycleSpace, DecomposeResums) {
    std::mt19937 rng(9);
    Graph g = generalized_petersen(10, 3);
    auto fc = fundamental_cycles(g, spanning_forest(g));
    for (int it = 0; it < 1000; ++it) {
        EdgeSet t = random_span_element(rng, fc, g.edge_bound());
        auto r = decompose(t, fc);
        ASSERT_TRUE(std::holds_alternative<std::vector<int>>(r));
        EdgeSet sum(g.edge_bound());
        for (int i : std::get<std::vector<int>>(r)) sum ^= fc[i];
        EXPECT_EQ(sum, t);
    }
}

TEST(CycleSpace, ExtractBasis) {
    Graph k = complete_graph(4);
    auto fc = fundamental_cycles(k, spanning_forest(k));
    EXPECT_EQ(extract_basis(k, fc), fc);
    auto more = fc;
    more.insert(more.begin() + 2, fc[0] ^ fc[1]);
    EXPECT_EQ(extract_basis(k, more), fc);
    EXPECT_THROW(extract_basis(k, {fc[0]}), NotGenerating);

    std::mt19937 rng(4);
    for (int it = 0; it < 30; ++it) {
        auto pb = kbtest::random_plane(rng, 6 + it);
        auto emb = pb.build();
        std::vector<EdgeSet> faces;
        for (int f = 0; f < emb.num_faces(); ++f) faces.push_back(emb.face_edges(f));
        auto b = extract_basis(emb.graph(), faces);
        EXPECT_EQ((int)b.size(), emb.num_faces() - 1);
        EXPECT_EQ(rank(faces), emb.num_faces() - 1);
    }
}

TEST(CycleSpace, EnumerateCycleSpace) {
    auto tri = enumerate_cycle_space(cycle_graph(3), 16);
    EXPECT_EQ(tri.size(), 2u);
    Graph pet = generalized_petersen(5, 2);
    auto all = enumerate_cycle_space(pet, 1 << 10);
    ASSERT_EQ(all.size(), 64u);
    std::set<std::vector<EdgeId>> seen;
    for (auto& s : all) {
        EXPECT_TRUE(is_eulerian(pet, s));
        seen.insert(s.ids());
    }
    EXPECT_EQ(seen.size(), 64u);
    for (int i = 0; i < 64; i += 7)
        for (int j = 0; j < 64; j += 5) EXPECT_TRUE(seen.count((all[i] ^ all[j]).ids()));
    EXPECT_THROW(enumerate_cycle_space(complete_graph(6), 512), CapExceeded);
}

TEST(CycleSpace, SpanExpress) {
    Span sp;
    EdgeSet a = EdgeSet::of(4, {0, 1}), b = EdgeSet::of(4, {1, 2});
    EXPECT_TRUE(sp.insert(a));
    EXPECT_TRUE(sp.insert(b));
    EXPECT_FALSE(sp.insert(a ^ b));
    auto r = sp.express(EdgeSet::of(4, {0, 2}));
    ASSERT_TRUE(std::holds_alternative<std::vector<int>>(r));
    EXPECT_EQ(std::get<std::vector<int>>(r), (std::vector<int>{0, 1}));
}
