#pragma once
// Graph operations that carry a basis along: contraction, edge addition,
// duplication, subdivision, edge replacement, and the subdivision pipeline
// that turns an arbitrary drawing into a 1-plane one.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kbasis/constructions.hpp"
#include "kbasis/cycle_space.hpp"
#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"
#include "kbasis/search.hpp"

namespace kb {

struct Transported {
    Graph graph;
    Basis basis;
};

// Throws PreconditionError unless b is a basis of g.
void require_basis(const Graph& g, const Basis& b);

Transported contract_basis(const Graph& g, const Basis& b, EdgeId e);
Transported add_edge_basis(const Graph& g, const Basis& b, VertexId u, VertexId v);
Transported duplicate_edge_basis(const Graph& g, const Basis& b, EdgeId e);
Transported subdivide_basis(const Graph& g, const Basis& b, EdgeId e);

struct TerminalGraph {
    Graph graph;
    VertexId s = -1, t = -1;
};
void require_terminal(const TerminalGraph& h);

struct AugmentedBasis {
    Basis basis;
    std::vector<EdgeSet> paths;  // each a simple s-t path
    int k = 0;
};

// max charge over basis ∪ paths
int augmented_charge(const Graph& g, const AugmentedBasis& ab);

struct Replaced {
    Graph graph;
    Basis basis;
    std::map<VertexId, VertexId> vmap;  // h vertex -> merged vertex
    std::map<EdgeId, EdgeId> emap;      // h edge -> merged edge
};
// e's endpoints u, v take the roles of s, t. The elements using e are paired
// with ab.paths by sorted index.
Replaced replace_edge_basis(const Graph& g, const Basis& b, EdgeId e, const TerminalGraph& h,
                            const AugmentedBasis& ab);

enum class AugmentedMode { Exact, PlanarOuter };
// Exact: betti(h) <= 8, simple paths only; throws CapExceeded beyond that.
AugmentedBasis augmented_basis_number(const TerminalGraph& h, int ell, AugmentedMode mode,
                                      const SearchBudget& budget = {});

// Simple s-t paths as edge sets, by DFS in ascending edge id order.
std::vector<EdgeSet> simple_paths(const Graph& g, VertexId s, VertexId t, long long cap);

// ---------------------------------------------------------------- drawings

// A drawing with crossings: which edge pairs cross, the order of crossings
// along each edge (from u to v), and the cyclic orders needed to rebuild the
// planarization.
struct Port {
    EdgeId edge;
    int toward;  // 0: towards edge.u, 1: towards edge.v
    friend bool operator==(const Port&, const Port&) = default;
};
struct CrossingSchedule {
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    std::map<EdgeId, std::vector<int>> order;           // crossing indices from u to v
    std::map<VertexId, std::vector<EdgeId>> vertex_rot;  // incident edges, cyclic
    std::vector<std::array<Port, 4>> crossing_rot;       // cyclic
};

class InconsistentSchedule : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
void check_schedule(const Graph& g, const CrossingSchedule& s);

// Chords of a circle through the vertices in `order`; angles get a small
// seeded jitter so no three chords meet in a point.
CrossingSchedule circular_layout_schedule(const Graph& g, const std::vector<VertexId>& order,
                                          unsigned seed = 1);

enum class SubdivisionPolicy {
    IndependentCrossings,  // two vertices between crossings, ends split where shared
    SingleGap,             // one vertex between consecutive crossings
};

struct Subdivided {
    Graph graph;
    OnePlaneEmbedding embedding;
    std::vector<VertexId> subdivision_vertices;
    std::vector<ChainStep> chain;  // unsubdivide steps back to the input
};
Subdivided make_1planar_by_subdivision(const Graph& g, const CrossingSchedule& s,
                                       SubdivisionPolicy policy =
                                           SubdivisionPolicy::IndependentCrossings);

struct DegreeReduced {
    Graph graph;
    std::vector<ChainStep> chain;  // contractions back to the input
};
// Splits vertices of degree > 3 (ceil/floor halves in incident-id order)
// until the maximum degree is 3.
DegreeReduced degree_reduce(const Graph& g);

}  // namespace kb
