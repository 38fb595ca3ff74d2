#include <gtest/gtest.h>

#include <random>

#include "kbasis/catalog.hpp"
#include "kbasis/embedding.hpp"
#include "support.hpp"

using namespace kb;

namespace {

bool has_kind(const std::vector<Violation>& v, const std::string& k) {
    for (auto& x : v)
        if (x.kind == k) return true;
    return false;
}

OnePlaneEmbedding k4_crossing() {
    kbtest::PlaneBuilder b(4);
    auto fs = b.faces();
    EXPECT_TRUE(b.add_crossing(fs[0], {0, 1, 2, 3}));
    return b.build();
}

void check_lattice(const EmbeddingProfile& p) {
    if (p.full_crossing) EXPECT_TRUE(p.poppy);
    if (p.ic) EXPECT_TRUE(p.nic);
    if (p.optimal) EXPECT_TRUE(p.full_crossing);
}

}  // namespace

TEST(Embedding, ValidateExamples) {
    auto k4 = planar_embedding(complete_graph(4));
    ASSERT_TRUE(k4.has_value());
    EXPECT_TRUE(validate(*k4).empty());
    EXPECT_TRUE(validate(k4_crossing()).empty());

    auto e = k4_crossing();
    auto rot = e.rotations();
    VertexId x = e.crossings()[0].dummy;
    rot[x].pop_back();
    OnePlaneEmbedding broken(e.graph(), e.crossings(), rot);
    EXPECT_TRUE(has_kind(validate(broken), "dummy degree"));
    EXPECT_THROW(require_valid(broken), InvalidEmbedding);

    Graph g = complete_graph(5);
    // edge 0 = 0-1 crossed by 2-3 and by 2-4
    EdgeId a = -1, b = -1, c = -1;
    for (auto& ed : g.edges()) {
        if (ed.u == 0 && ed.v == 1) a = ed.id;
        if (ed.u == 2 && ed.v == 3) b = ed.id;
        if (ed.u == 2 && ed.v == 4) c = ed.id;
    }
    OnePlaneEmbedding twice(g, {{5, a, b}, {6, a, c}}, {});
    auto v = validate(twice);
    EXPECT_TRUE(has_kind(v, "edge crossed twice"));
}

TEST(Embedding, EulerOnRandomPlaneGraphs) {
    std::mt19937 rng(21);
    for (int it = 0; it < 100; ++it) {
        auto e = kbtest::random_connected_skeleton(rng, 5 + it % 20, it % 4);
        ASSERT_TRUE(validate(e).empty()) << it;
        EXPECT_TRUE(euler_ok(e));
        int vx = (int)e.planar_vertices().size();
        EXPECT_EQ(vx - (int)e.segments().size() + e.num_faces(), 2);
    }
}

TEST(Embedding, SkeletonExamples) {
    auto pl = planar_embedding(complete_graph(4));
    EXPECT_TRUE(skeleton(*pl) == complete_graph(4));
    auto sk = skeleton(k4_crossing());
    EXPECT_EQ(sk.m(), 4);
    EXPECT_EQ(sk.n(), 4);
    auto fr = entry_embedding("Franklin", "fig:Franklin");
    Graph s = skeleton(fr);
    EXPECT_EQ(s.m() + 2 * (int)fr.crossings().size(), fr.graph().m());
}

TEST(Embedding, SkeletonPlusCrossedIsEverything) {
    std::mt19937 rng(8);
    for (int it = 0; it < 50; ++it) {
        auto e = kbtest::random_connected_skeleton(rng, 8 + it % 10, 3);
        std::set<EdgeId> all;
        for (auto& ed : skeleton(e).edges()) all.insert(ed.id);
        for (auto& c : e.crossings()) {
            EXPECT_TRUE(all.insert(c.e).second);
            EXPECT_TRUE(all.insert(c.f).second);
        }
        EXPECT_EQ((int)all.size(), e.graph().m());
    }
}

TEST(Embedding, CellsExamples) {
    auto tri = planar_embedding(cycle_graph(3));
    auto ct = cells(*tri);
    EXPECT_EQ(ct.size(), 2u);
    auto k = cells(k4_crossing());
    ASSERT_EQ(k.size(), 5u);
    int crossed = 0, sides = 0;
    for (auto& c : k) {
        crossed += c.crossed;
        sides += (int)c.darts.size();
        if (c.crossed) EXPECT_EQ(c.darts.size(), 3u);
    }
    EXPECT_EQ(crossed, 4);
    EXPECT_EQ(sides, 2 * (int)k4_crossing().segments().size());

    auto cube = entry_embedding("CubeDiagonals", "optimal");
    auto cc = cells(cube);
    int uncrossed = 0;
    for (auto& c : cc) uncrossed += !c.crossed;
    EXPECT_EQ(uncrossed, 0);
}

TEST(Embedding, SkirtWalksOfFullCrossing) {
    auto e = k4_crossing();
    VertexId x = e.crossings()[0].dummy;
    auto w = skirt_walks(e, x);
    for (auto& s : w) {
        EXPECT_EQ(s.darts.size(), 1u);
        EXPECT_NE(s.from, x);
        EXPECT_NE(s.to, x);
    }
    auto cyc = crossing_surrounding_cycle(e, x);
    ASSERT_TRUE(std::holds_alternative<EdgeSet>(cyc));
    auto& c = std::get<EdgeSet>(cyc);
    EXPECT_EQ(c.count(), 4);
    EXPECT_TRUE(is_eulerian(e.graph(), c));
    EXPECT_FALSE(c.test(e.crossings()[0].e));
    EXPECT_THROW(skirt_walks(e, 0), InvalidEmbedding);
}

TEST(Embedding, SkirtWalkEndpointsBelongToCrossingEdges) {
    std::mt19937 rng(33);
    for (int it = 0; it < 60; ++it) {
        auto e = kbtest::random_connected_skeleton(rng, 6 + it % 15, 3);
        for (auto& c : e.crossings()) {
            auto& ee = e.graph().edge(c.e);
            auto& ff = e.graph().edge(c.f);
            auto on = [](const Edge& ed, VertexId v) { return ed.u == v || ed.v == v; };
            for (auto& w : skirt_walks(e, c.dummy)) {
                EXPECT_TRUE((on(ee, w.from) && on(ff, w.to)) || (on(ff, w.from) && on(ee, w.to)));
                for (VertexId v : w.vertices) EXPECT_NE(v, c.dummy);
            }
        }
    }
}

TEST(Embedding, PoppyFromSplitFace) {
    kbtest::PlaneBuilder b(6);
    auto fs = b.faces();
    ASSERT_TRUE(b.add_chord(fs[0], 0, 3));
    for (auto& f : kbtest::real_faces(b))
        if (f.size() == 4) {
            ASSERT_TRUE(b.add_crossing(f, {0, 1, 2, 3}));
            break;
        }
    auto e = b.build();
    EXPECT_TRUE(is_poppy(e, e.crossings()[0].dummy));
    EXPECT_TRUE(classify(e).full_crossing);

    // pentagon: one skirt walk has two edges, the union is still simple
    kbtest::PlaneBuilder c(5);
    auto cf = c.faces();
    ASSERT_TRUE(c.add_crossing(cf[0], {0, 1, 2, 3}));
    auto ec = c.build();
    EXPECT_TRUE(is_poppy(ec, ec.crossings()[0].dummy));
    EXPECT_FALSE(classify(ec).full_crossing);
}

TEST(Embedding, NotPoppyWithPendantInCell) {
    // pentagon 0..4 with 0-2 crossing 1-3; a pendant edge 4-5 sits in the
    // cell whose skirt walk is 3-4-0, so that walk visits 4 twice
    kbtest::PlaneBuilder b(5);
    auto cf = b.faces();
    ASSERT_TRUE(b.add_crossing(cf[0], {0, 1, 2, 3}));
    VertexId x = kbtest::PlaneBuilder::dummy_base;
    for (auto& f : b.faces()) {
        auto i4 = std::find(f.begin(), f.end(), 4);
        if (i4 == f.end() || std::find(f.begin(), f.end(), x) == f.end()) continue;
        int i = int(i4 - f.begin());
        VertexId before = f[(i + f.size() - 1) % f.size()];
        VertexId p = b.g.add_vertex();
        b.g.add_edge(4, p);
        auto& r = b.rot[4];
        r.insert(std::find(r.begin(), r.end(), before) + 1, p);
        b.rot[p] = {4};
        break;
    }
    auto e = b.build();
    ASSERT_TRUE(validate(e).empty());
    VertexId d = e.crossings()[0].dummy;
    EXPECT_TRUE(std::holds_alternative<NotPoppy>(crossing_surrounding_cycle(e, d)));
    EXPECT_FALSE(classify(e).poppy);

    auto k34 = entry_embedding("K_{3,4}", "fig:goodOrientation(a)");
    for (auto& c : k34.crossings()) {
        auto r = crossing_surrounding_cycle(k34, c.dummy);
        ASSERT_TRUE(std::holds_alternative<EdgeSet>(r));
        EXPECT_TRUE(is_eulerian(k34.graph(), std::get<EdgeSet>(r)));
    }
}

TEST(Embedding, ClassifyExamples) {
    auto pet = entry_embedding("Petersen", "fig:goodOrientation(b)");
    auto p = classify(pet);
    EXPECT_TRUE(p.poppy);
    EXPECT_FALSE(p.locally_maximal);
    auto k4 = classify(k4_crossing());
    EXPECT_TRUE(k4.full_crossing);
    EXPECT_TRUE(k4.ic);
    auto cube = classify(entry_embedding("CubeDiagonals", "optimal"));
    EXPECT_TRUE(cube.optimal);
    EXPECT_TRUE(cube.full_crossing);
    EXPECT_EQ(cube.crossings, 6);
}

TEST(Embedding, ClassifyLatticeOnRandomEmbeddings) {
    std::mt19937 rng(1000);
    int poppy = 0, full = 0;
    for (int it = 0; it < 1000; ++it) {
        auto e = kbtest::random_connected_skeleton(rng, 4 + it % 9, 1 + it % 4);
        auto p = classify(e);
        check_lattice(p);
        poppy += p.poppy;
        full += p.full_crossing;
        if (p.poppy && connected(e.graph())) EXPECT_TRUE(p.connected_skeleton);
    }
    EXPECT_GT(poppy, 0);
    EXPECT_GT(full, 0);
}

TEST(Embedding, ClassifyLatticeOnCatalog) {
    for (auto& name : list_entries())
        for (auto& d : catalog_entry(name).drawings) {
            auto e = entry_embedding(name, d.figure);
            auto p = classify(e);
            check_lattice(p);
            if (p.poppy && connected(e.graph())) EXPECT_TRUE(p.connected_skeleton) << name;
        }
}

TEST(Embedding, RepairLocallyMaximal) {
    auto k4 = k4_crossing();
    auto same = repair_locally_maximal(k4);
    EXPECT_EQ(same.rotations(), k4.rotations());
    auto k6 = entry_embedding("K6", "fig:K6");
    auto r6 = repair_locally_maximal(k6);
    EXPECT_EQ(r6.rotations(), k6.rotations());
    EXPECT_TRUE(classify(r6).connected_skeleton);
    auto cube = entry_embedding("CubeDiagonals", "optimal");
    EXPECT_EQ(repair_locally_maximal(cube).rotations(), cube.rotations());
    auto pet = entry_embedding("Petersen", "fig:goodOrientation(b)");
    EXPECT_THROW(repair_locally_maximal(pet), InvalidEmbedding);
}

TEST(Embedding, PlanarEmbeddingDetectsNonPlanar) {
    EXPECT_FALSE(planar_embedding(complete_graph(5)).has_value());
    EXPECT_FALSE(planar_embedding(complete_bipartite(3, 3)).has_value());
    auto c = planar_embedding(generalized_petersen(6, 1));
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(validate(*c).empty());
    EXPECT_EQ(c->num_faces(), 8);
}

TEST(Embedding, DraftRemoveEdgesResolvesCrossing) {
    auto e = k4_crossing();
    auto d = EmbeddingDraft::from(e);
    d.remove_edges({e.crossings()[0].e});
    auto r = d.build();
    EXPECT_TRUE(validate(r).empty());
    EXPECT_TRUE(r.crossings().empty());
    EXPECT_EQ(r.graph().m(), 5);
}
