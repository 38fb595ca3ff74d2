#pragma once
// Basis builders for the upper-bound results: facial 2-bases, the union
// cover, connected-skeleton 4-bases, auxiliary-graph 8-bases, K4 / poppy
// assignment bases and the 3-bases built on balanced orientations.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "kbasis/cycle_space.hpp"
#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"

namespace kb {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Edge sets of every face boundary (bridges cancel). Needs a plane embedding.
std::vector<EdgeSet> facial_cycles(const OnePlaneEmbedding& plane);

// All faces but one per component. The dropped face is the outer face when
// set, else the longest face (lowest id on ties).
Basis facial_basis(const OnePlaneEmbedding& plane);

// Fact 2: 2-connected plane graph, all faces but the outer one.
Basis planar_2basis(const OnePlaneEmbedding& plane);
// the face planar_2basis treats as outer
int outer_face_choice(const OnePlaneEmbedding& plane);

// g = g1 ∪ g2 with g1 ∩ g2 spanning and connected; b1's elements are
// offered to extract_basis before b2's.
Basis union_cover_basis(const Graph& g, const Graph& g1, const Graph& g2, const Basis& b1,
                        const Basis& b2);

Basis connected_skeleton_4basis(const OnePlaneEmbedding& e);

struct AuxiliaryGraph {
    Graph q;                            // one vertex per skeleton component
    std::vector<int> component;         // skeleton component per abstract vertex id
    std::map<EdgeId, EdgeId> back;      // q edge -> abstract edge
    std::map<EdgeId, EdgeId> partner;   // q edge -> its parallel twin
};
AuxiliaryGraph auxiliary_graph(const OnePlaneEmbedding& e);

Basis disconnected_skeleton_8basis(const OnePlaneEmbedding& e);

// One element of a K4 assignment basis: which sides (side i joins u_i and
// u_{i+1}) and which chords it uses.
struct K4Cycle {
    std::array<bool, 4> side{};
    bool chord02 = false;
    bool chord13 = false;
};
// labels: value per side, multiset exactly {1,1,2,2}
std::array<K4Cycle, 3> k4_assignment_basis(const std::array<int, 4>& labels);
// K4 on u0..u3 with side i as edge i, chord02 as edge 4, chord13 as edge 5
Graph k4_frame_graph();
EdgeSet realize(const K4Cycle& c, const std::array<EdgeSet, 4>& sides, const EdgeSet& chord02,
                const EdgeSet& chord13);

// Direction of each oriented edge: true = stored u->v.
struct BalancedOrientation {
    std::map<EdgeId, bool> forward;
};

// A dart traverses an edge "clockwise" when it runs against the edge's
// orientation (head to tail).
bool dart_clockwise(const OnePlaneEmbedding& e, const BalancedOrientation& o, int dart);

// Lemma 9 via an Eulerian orientation of the dual. Each listed face must be
// bounded by a 4-cycle; afterwards it has two clockwise and two
// counter-clockwise edges.
BalancedOrientation balanced_dual_orientation(const OnePlaneEmbedding& sk,
                                              const std::set<int>& crossing_faces);

// nullopt when the walk's darts disagree
std::optional<bool> walk_clockwise(const OnePlaneEmbedding& e, const BalancedOrientation& o,
                                   const SkirtWalk& w);
// labels (1 clockwise, 2 otherwise) per side of x; throws unless 2/2
std::array<int, 4> labels_from_orientation(const OnePlaneEmbedding& e,
                                           const BalancedOrientation& o, VertexId x);

std::array<EdgeSet, 3> poppy_assignment_basis(const OnePlaneEmbedding& e, VertexId x,
                                              const std::array<int, 4>& labels);

std::variant<BalancedOrientation, Infeasible> balanced_skirt_orientation(
    const OnePlaneEmbedding& e);

struct FullCrossingOptions {
    // Try to keep this crossed edge at charge <= 1 by choosing between the
    // dual orientation and its reverse. Best effort: the result may still
    // charge it more when neither choice does.
    std::optional<EdgeId> low_charge_edge;
};
Basis fullcrossing_3basis(const OnePlaneEmbedding& e, const FullCrossingOptions& opt = {});
Basis poppy_3basis(const OnePlaneEmbedding& e, const BalancedOrientation& o);

// GP(10,3): outer i-(i+1) edges 0..9, spokes i-(10+i) 10..19, inner
// (10+i)-(10+(i+3)%10) 20..29. Basis: D_inner then D_e for inner edges in
// id order.
std::pair<Graph, Basis> desargues_3basis();

}  // namespace kb
