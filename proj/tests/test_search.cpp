#include <gtest/gtest.h>

#include "kbasis/catalog.hpp"
#include "kbasis/search.hpp"
#include "kbasis/transforms.hpp"

using namespace kb;

namespace {

BasisNumberCertificate solve(const Graph& g, int threads = 1) {
    SearchBudget b;
    b.threads = threads;
    auto r = exact_basis_number(g, b);
    EXPECT_TRUE(std::holds_alternative<BasisNumberCertificate>(r));
    return std::get<BasisNumberCertificate>(r);
}

}  // namespace

TEST(Search, CountingBound) {
    EXPECT_EQ(counting_lower_bound(complete_graph(4)), 2);
    EXPECT_EQ(counting_lower_bound(cycle_graph(7)), 1);
    Graph tutte = entry_graph("Tutte8Cage");
    EXPECT_EQ(girth(tutte), 8);
    EXPECT_EQ(betti(tutte), 16);
    EXPECT_EQ(counting_lower_bound(tutte), 3);
    EXPECT_THROW(counting_lower_bound(path_graph(3)), GraphError);
}

TEST(Search, CubicGirthBound) {
    EXPECT_EQ(cubic_girth_bound(30, 3), 7);
    EXPECT_EQ(cubic_girth_bound(30, 4), 11);
    EXPECT_LT(cubic_girth_bound(4, 1), 3);
    EXPECT_THROW(cubic_girth_bound(7, 3), std::invalid_argument);
    EXPECT_EQ(cubic_girth_certificate(entry_graph("Tutte8Cage")), 4);
    EXPECT_FALSE(cubic_girth_certificate(complete_graph(5)).has_value());
}

TEST(Search, ExactSmallGraphs) {
    struct Case {
        Graph g;
        int b;
    };
    std::vector<Case> cases{{complete_graph(4), 2},
                            {complete_graph(5), 3},
                            {complete_bipartite(3, 3), 3},
                            {generalized_petersen(5, 2), 3},
                            {generalized_petersen(3, 1), 2}};
    for (auto& c : cases) {
        auto cert = solve(c.g);
        EXPECT_EQ(cert.value, c.b);
        EXPECT_TRUE(cert.exhaustive);
        EXPECT_TRUE(verify_kbasis(c.g, cert.witness, cert.value).verdict);
        EXPECT_GE(cert.value, counting_lower_bound(c.g));
        if (betti(c.g) <= 6) EXPECT_EQ(naive_basis_number(c.g), c.b);
    }
}

TEST(Search, ExhaustiveMeansNoSmallerBasis) {
    for (auto g : {complete_graph(5), generalized_petersen(5, 2)}) {
        auto cert = solve(g);
        auto cands = sorted_cycle_space(g, 1 << 16);
        std::vector<int> cap(g.edge_bound(), cert.value - 1);
        auto r = search_basis(g, cands, cap, SearchBudget{});
        EXPECT_EQ(r.outcome, SearchOutcome::None);
        EXPECT_FALSE(naive_has_kbasis(g, cert.value - 1));
    }
}

TEST(Search, ThreadsGiveTheSameCertificate) {
    for (auto g : {complete_graph(5), complete_bipartite(3, 4), generalized_petersen(8, 3)}) {
        auto a = solve(g, 1), b = solve(g, 3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(Search, CubicPerVertexStep) {
    // in a k-basis of a cubic graph at most floor(3k/2) elements meet a vertex
    for (auto g : {complete_graph(4), complete_bipartite(3, 3), generalized_petersen(5, 2),
                   generalized_petersen(3, 1), generalized_petersen(8, 3)}) {
        auto cert = solve(g);
        for (VertexId v : g.vertices()) {
            int through = 0;
            for (auto& s : cert.witness) {
                bool hit = false;
                for (EdgeId e : g.incident(v)) hit |= s.test(e);
                through += hit;
            }
            EXPECT_LE(through, 3 * cert.value / 2);
        }
    }
}

TEST(Search, BudgetExceededReportsBounds) {
    SearchBudget tiny;
    tiny.max_nodes = 5;
    auto r = exact_basis_number(generalized_petersen(5, 2), tiny);
    ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(r));
    EXPECT_GE(std::get<BudgetExceeded>(r).lower_bound, 2);

    SearchBudget small_cap;
    small_cap.max_elements = 100;
    auto r2 = exact_basis_number(complete_graph(6), small_cap);
    ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(r2));
}

TEST(Search, ContractionChain) {
    Graph pet = generalized_petersen(5, 2);
    EXPECT_EQ(lower_bound_by_contraction_chain(pet, {}, 3).lower_bound, 3);

    // subdivide two Petersen edges, then undo
    Graph g = pet;
    std::vector<ChainStep> chain;
    for (EdgeId e : {0, 7}) {
        auto s = subdivide(g, e);
        g = s.graph;
        chain.insert(chain.begin(), ChainStep{ChainStep::Unsubdivide, s.mid});
    }
    auto r = lower_bound_by_contraction_chain(g, chain, 3);
    EXPECT_TRUE(isomorphic(r.base, pet));
    EXPECT_EQ(r.lower_bound, 3);

    EXPECT_THROW(lower_bound_by_contraction_chain(pet, {{ChainStep::Unsubdivide, 0}}, 3), GraphError);
}

TEST(Search, SubdividedTutteCage) {
    Graph s = entry_graph("SubdividedTutte8Cage");
    EXPECT_EQ(s.n(), 34);
    EXPECT_EQ(s.max_degree(), 3);
    std::vector<ChainStep> chain;
    for (VertexId v : s.vertices())
        if (s.degree(v) == 2) chain.push_back({ChainStep::Unsubdivide, v});
    EXPECT_EQ(chain.size(), 4u);
    Graph tutte = entry_graph("Tutte8Cage");
    auto cert = cubic_girth_certificate(tutte);
    ASSERT_TRUE(cert.has_value());
    auto r = lower_bound_by_contraction_chain(s, chain, *cert);
    EXPECT_TRUE(isomorphic(r.base, tutte));
    EXPECT_EQ(r.lower_bound, 4);
}
