#pragma once
// Multigraph with stable vertex and edge ids, plus the structural helpers
// (components, blocks, forests, packings, splitting) the rest builds on.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kb {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id = -1;
    VertexId u = -1, v = -1;
    bool loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // vertices 0..n-1, no edges

    VertexId add_vertex();  // fresh id = vertex_bound()
    void add_vertex(VertexId v);
    EdgeId add_edge(VertexId u, VertexId v);  // fresh id
    void add_edge_with_id(EdgeId id, VertexId u, VertexId v);
    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);  // must be isolated

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < (int)vpresent_.size() && vpresent_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < (int)epresent_.size() && epresent_[e];
    }
    const Edge& edge(EdgeId e) const;
    const std::vector<VertexId>& vertices() const { return vlist_; }
    const std::vector<Edge>& edges() const { return elist_; }
    std::vector<EdgeId> edge_ids() const;
    // incident edge ids, ascending; a loop is listed twice
    const std::vector<EdgeId>& incident(VertexId v) const;
    int degree(VertexId v) const { return (int)incident(v).size(); }
    int max_degree() const;

    int n() const { return (int)vlist_.size(); }
    int m() const { return (int)elist_.size(); }
    // one past the largest id ever issued; ids are never reused
    EdgeId edge_bound() const { return next_edge_; }
    VertexId vertex_bound() const { return next_vertex_; }

    bool simple() const;
    // raise the fresh-id counters (keeps ids unique across derived graphs)
    void reserve_ids(VertexId vb, EdgeId eb) {
        next_vertex_ = std::max(next_vertex_, vb);
        next_edge_ = std::max(next_edge_, eb);
    }

private:
    std::vector<char> vpresent_;
    std::vector<std::vector<EdgeId>> inc_;
    std::vector<VertexId> vlist_;
    std::vector<char> epresent_;
    std::vector<Edge> ebyid_;
    std::vector<Edge> elist_;
    EdgeId next_edge_ = 0;
    VertexId next_vertex_ = 0;

    void check_vertex(VertexId v) const;
};

bool operator==(const Graph& a, const Graph& b);

// Subgraph keeping all vertices of g and the listed edges (ids preserved).
Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& keep);

int betti(const Graph& g);

// component index per vertex id (-1 for absent ids); components numbered by
// smallest member vertex
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
std::vector<std::vector<VertexId>> components(const Graph& g);
int num_components(const Graph& g);
bool connected(const Graph& g);

// Partition of edges into blocks (bridges and loops are singletons).
// Each block sorted ascending; blocks ordered by smallest edge id.
std::vector<std::vector<EdgeId>> blocks(const Graph& g);
bool two_connected(const Graph& g);

enum class RootPolicy { SmallestId };

struct SpanningForest {
    std::vector<EdgeId> tree_edges;       // ascending
    std::vector<VertexId> parent;         // by vertex id, -1 for roots/absent
    std::vector<EdgeId> parent_edge;      // by vertex id, -1 for roots/absent
    std::vector<int> depth;               // by vertex id
    bool contains(EdgeId e) const;
    std::vector<EdgeId> path(VertexId a, VertexId b) const;  // tree path edges
};

SpanningForest spanning_forest(const Graph& g, RootPolicy policy = RootPolicy::SmallestId);
// Forest from an explicit edge set; throws if the set is not a spanning forest.
SpanningForest forest_from_edges(const Graph& g, const std::vector<EdgeId>& edges);

struct Infeasible {};
using TreePacking = std::vector<std::vector<EdgeId>>;

// Exact: k edge-disjoint spanning trees via matroid partition, or Infeasible.
std::variant<TreePacking, Infeasible> tree_packing(const Graph& g, int k);
bool is_spanning_tree(const Graph& g, const std::vector<EdgeId>& edges);

struct SplitResult {
    Graph graph;
    VertexId new_vertex;  // w; v keeps its id
    EdgeId new_edge;      // vw
};
// edges in `to_new` move to the fresh vertex w, the rest stay at v
SplitResult vertex_split(const Graph& g, VertexId v, const std::vector<EdgeId>& stay,
                         const std::vector<EdgeId>& to_new);

struct ContractResult {
    Graph graph;
    VertexId merged;  // fresh id
};
ContractResult contract(const Graph& g, EdgeId e);

struct SubdivideResult {
    Graph graph;
    VertexId mid;
    EdgeId first, second;  // (u, mid), (mid, v)
};
SubdivideResult subdivide(const Graph& g, EdgeId e);

struct UnsubdivideResult {
    Graph graph;
    EdgeId merged;
};
// x must have degree 2 with two non-loop edges; the merged edge keeps the
// smaller of the two ids
UnsubdivideResult unsubdivide(const Graph& g, VertexId x);

// loops give 1, parallel pairs 2; nullopt for forests
std::optional<int> girth(const Graph& g);

// Canonical string for isomorphism testing (vertex and edge ids ignored).
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

Graph lcf_graph(int n, const std::vector<int>& jumps);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
// outer cycle edges, then spokes, then inner edges i-(i+k); endpoints stored
// smaller first
Graph generalized_petersen(int n, int k);

std::string to_dot(const Graph& g);

}  // namespace kb
