#pragma once
// Rotation-system model of plane and 1-plane drawings.
//
// Planarization edges ("segments") are numbered by abstract edge id
// ascending; an uncrossed edge u-v is one segment u->v, a crossed edge is
// u->d (index 0) and d->v (index 1). Segment p has darts 2p (tail to head)
// and 2p+1 (head to tail). Faces follow next(h) = successor of twin(h) in
// the rotation at head(h).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kbasis/cycle_space.hpp"
#include "kbasis/graph.hpp"

namespace kb {

struct Crossing {
    VertexId dummy = -1;
    EdgeId e = -1, f = -1;
};

struct Segment {
    EdgeId edge = -1;
    int index = 0;
    VertexId tail = -1, head = -1;
};

struct Violation {
    std::string kind;
    std::string detail;
};

class InvalidEmbedding : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OnePlaneEmbedding {
public:
    OnePlaneEmbedding() = default;
    // rotations: darts leaving each planarization vertex, in cyclic order
    OnePlaneEmbedding(Graph g, std::vector<Crossing> crossings,
                      std::map<VertexId, std::vector<int>> rotations,
                      std::optional<int> outer_face = std::nullopt);
    // rotations given by neighbouring planarization vertices; G× must be simple
    static OnePlaneEmbedding from_neighbors(Graph g, std::vector<Crossing> crossings,
                                            const std::map<VertexId, std::vector<VertexId>>& rot,
                                            std::optional<int> outer_face = std::nullopt);

    const Graph& graph() const { return g_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Segment>& segments() const { return segs_; }
    const std::map<VertexId, std::vector<int>>& rotations() const { return rot_; }
    std::optional<int> outer_face() const { return outer_; }
    void set_outer_face(std::optional<int> f) { outer_ = f; }

    bool is_dummy(VertexId v) const { return crossing_index_.count(v) > 0; }
    const Crossing& crossing_at(VertexId dummy) const;
    int crossing_index(VertexId dummy) const;
    std::vector<VertexId> planar_vertices() const;  // abstract then dummies
    bool crossed(EdgeId e) const;
    std::vector<int> segments_of(EdgeId e) const;

    int num_darts() const { return 2 * (int)segs_.size(); }
    VertexId origin(int h) const { return h & 1 ? segs_[h >> 1].head : segs_[h >> 1].tail; }
    VertexId head(int h) const { return origin(h ^ 1); }
    EdgeId edge_of(int h) const { return segs_[h >> 1].edge; }
    static int twin(int h) { return h ^ 1; }
    int next(int h) const;  // needs consistent rotations

    // structural consistency of the rotation lists (each dart once, at its origin)
    bool consistent() const { return consistent_; }
    const std::vector<std::vector<int>>& faces() const;
    int face_of(int h) const;
    int num_faces() const { return (int)faces().size(); }
    // XOR of abstract edges along the face boundary
    EdgeSet face_edges(int f) const;
    std::vector<VertexId> face_vertices(int f) const;  // origins in order

    // dart of an uncrossed edge leaving `from` (loops: the forward dart)
    int dart_from(EdgeId e, VertexId from) const;

private:
    Graph g_;
    std::vector<Crossing> crossings_;
    std::map<VertexId, int> crossing_index_;
    std::vector<Segment> segs_;
    std::map<VertexId, std::vector<int>> rot_;
    std::optional<int> outer_;
    std::vector<int> succ_;  // succ_[h] = dart after h around origin(h)
    bool consistent_ = false;
    std::vector<std::string> structure_errors_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_;
    std::map<EdgeId, std::vector<int>> edge_segs_;
    friend std::vector<Violation> validate(const OnePlaneEmbedding& e);
};

std::vector<Violation> validate(const OnePlaneEmbedding& e);
void require_valid(const OnePlaneEmbedding& e);

// Plane embedding helper: rotations of an abstract graph with no crossings.
OnePlaneEmbedding plane_embedding(Graph g, const std::map<VertexId, std::vector<int>>& rotations,
                                  std::optional<int> outer_face = std::nullopt);

// Some plane embedding of g (Boyer-Myrvold), or nullopt if g is not planar.
// Loops are not supported.
std::optional<OnePlaneEmbedding> planar_embedding(const Graph& g);

// ---------------------------------------------------------------- editing

// Dart named independently of segment numbering.
struct DartKey {
    EdgeId edge;
    int seg;
    bool rev;  // traverses the segment head to tail
    friend bool operator==(const DartKey& a, const DartKey& b) {
        return a.edge == b.edge && a.seg == b.seg && a.rev == b.rev;
    }
};

struct EmbeddingDraft {
    Graph graph;
    std::vector<Crossing> crossings;
    std::map<VertexId, std::vector<DartKey>> rot;

    static EmbeddingDraft from(const OnePlaneEmbedding& e);
    OnePlaneEmbedding build() const;
    // Drop the listed abstract edges. A crossing that loses one edge is
    // resolved by merging the survivor's two segments.
    void remove_edges(const std::set<EdgeId>& edges);
};

// ---------------------------------------------------------------- queries

Graph skeleton(const OnePlaneEmbedding& e);
// Plane embedding of the skeleton, rotations inherited from G×.
OnePlaneEmbedding skeleton_embedding(const OnePlaneEmbedding& e);

struct Cell {
    int face;
    std::vector<int> darts;
    std::vector<VertexId> vertices;
    bool crossed;
};
std::vector<Cell> cells(const OnePlaneEmbedding& e);

// Side i joins u_i and u_{i+1}, where u_j = head of the j-th dart in the
// rotation at the dummy; it is the boundary of the face of dart j+1,
// traversed from u_{i+1} to u_i.
struct SkirtWalk {
    VertexId crossing;
    int side;
    int face;
    std::vector<int> darts;
    std::vector<EdgeId> edge_ids;    // abstract edge of each dart
    std::vector<VertexId> vertices;  // from .. to
    VertexId from, to;
    EdgeSet edges(int width) const { return EdgeSet::of(width, edge_ids); }
};

std::array<SkirtWalk, 4> skirt_walks(const OnePlaneEmbedding& e, VertexId x);
// u_0..u_3 and the chords: chord02 joins u_0,u_2 and chord13 joins u_1,u_3
struct CrossingFrame {
    std::array<VertexId, 4> u;
    EdgeId chord02, chord13;
};
CrossingFrame crossing_frame(const OnePlaneEmbedding& e, VertexId x);

struct EmbeddingProfile {
    bool ic = false;
    bool nic = false;
    bool full_crossing = false;
    bool locally_maximal = false;
    bool poppy = false;
    bool near_independent_skirts = false;
    bool connected_skeleton = false;
    bool optimal = false;
    int crossings = 0;
};

EmbeddingProfile classify(const OnePlaneEmbedding& e);

struct NotPoppy {};
std::variant<EdgeSet, NotPoppy> crossing_surrounding_cycle(const OnePlaneEmbedding& e, VertexId x);
bool is_poppy(const OnePlaneEmbedding& e, VertexId x);

OnePlaneEmbedding repair_locally_maximal(const OnePlaneEmbedding& e);

// Euler check per component of G×: V - E + F = 2 (an isolated vertex
// counts as one face).
bool euler_ok(const OnePlaneEmbedding& e);

std::string to_dot(const OnePlaneEmbedding& e);

}  // namespace kb
