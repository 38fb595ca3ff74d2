#include "kbasis/embedding.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace kb {

// ---------------------------------------------------------------- construction

OnePlaneEmbedding::OnePlaneEmbedding(Graph g, std::vector<Crossing> crossings,
                                     std::map<VertexId, std::vector<int>> rotations,
                                     std::optional<int> outer_face)
    : g_(std::move(g)), crossings_(std::move(crossings)), rot_(std::move(rotations)),
      outer_(outer_face) {
    for (int i = 0; i < (int)crossings_.size(); ++i) crossing_index_[crossings_[i].dummy] = i;
    // dummies per edge, in registry order
    std::map<EdgeId, std::vector<VertexId>> on_edge;
    for (auto& c : crossings_) {
        if (g_.has_edge(c.e)) on_edge[c.e].push_back(c.dummy);
        if (g_.has_edge(c.f) && c.f != c.e) on_edge[c.f].push_back(c.dummy);
    }
    for (auto& e : g_.edges()) {
        std::vector<VertexId> chain{e.u};
        auto it = on_edge.find(e.id);
        if (it != on_edge.end()) chain.insert(chain.end(), it->second.begin(), it->second.end());
        chain.push_back(e.v);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            edge_segs_[e.id].push_back((int)segs_.size());
            segs_.push_back({e.id, (int)i, chain[i], chain[i + 1]});
        }
    }
    // structural consistency: each dart exactly once, listed at its origin
    int nd = num_darts();
    succ_.assign(nd, -1);
    std::vector<int> seen(nd, 0);
    consistent_ = true;
    for (auto& [v, darts] : rot_) {
        if (!g_.has_vertex(v) && !is_dummy(v)) {
            structure_errors_.push_back("rotation for unknown vertex " + std::to_string(v));
            consistent_ = false;
            continue;
        }
        for (size_t i = 0; i < darts.size(); ++i) {
            int h = darts[i];
            if (h < 0 || h >= nd) {
                structure_errors_.push_back("dart " + std::to_string(h) + " out of range at " +
                                            std::to_string(v));
                consistent_ = false;
                continue;
            }
            if (origin(h) != v) {
                structure_errors_.push_back("dart " + std::to_string(h) + " listed at " +
                                            std::to_string(v) + " but leaves " +
                                            std::to_string(origin(h)));
                consistent_ = false;
            }
            if (seen[h]++) {
                structure_errors_.push_back("dart " + std::to_string(h) + " listed twice");
                consistent_ = false;
            }
            succ_[h] = darts[(i + 1) % darts.size()];
        }
    }
    for (int h = 0; h < nd; ++h)
        if (!seen[h]) {
            structure_errors_.push_back("dart " + std::to_string(h) + " missing from rotations");
            consistent_ = false;
        }
    if (consistent_) {
        face_of_.assign(nd, -1);
        for (int h = 0; h < nd; ++h) {
            if (face_of_[h] != -1) continue;
            std::vector<int> f;
            int c = h;
            while (face_of_[c] == -1) {
                face_of_[c] = (int)faces_.size();
                f.push_back(c);
                c = next(c);
            }
            faces_.push_back(std::move(f));
        }
    }
}

OnePlaneEmbedding OnePlaneEmbedding::from_neighbors(
    Graph g, std::vector<Crossing> crossings,
    const std::map<VertexId, std::vector<VertexId>>& rot, std::optional<int> outer_face) {
    // build once without rotations to learn the segment numbering
    OnePlaneEmbedding tmp(g, crossings, {});
    std::map<std::pair<VertexId, VertexId>, int> dart;
    for (int p = 0; p < (int)tmp.segs_.size(); ++p) {
        auto& s = tmp.segs_[p];
        if (s.tail == s.head) throw InvalidEmbedding("from_neighbors needs a loopless planarization");
        if (!dart.emplace(std::make_pair(s.tail, s.head), 2 * p).second ||
            !dart.emplace(std::make_pair(s.head, s.tail), 2 * p + 1).second)
            throw InvalidEmbedding("from_neighbors needs a simple planarization");
    }
    std::map<VertexId, std::vector<int>> r;
    for (auto& [v, nbs] : rot)
        for (VertexId w : nbs) {
            auto it = dart.find({v, w});
            if (it == dart.end())
                throw InvalidEmbedding("no segment " + std::to_string(v) + "-" + std::to_string(w));
            r[v].push_back(it->second);
        }
    return OnePlaneEmbedding(std::move(g), std::move(crossings), std::move(r), outer_face);
}

const Crossing& OnePlaneEmbedding::crossing_at(VertexId dummy) const {
    return crossings_.at(crossing_index(dummy));
}

int OnePlaneEmbedding::crossing_index(VertexId dummy) const {
    auto it = crossing_index_.find(dummy);
    if (it == crossing_index_.end()) throw InvalidEmbedding("not a dummy: " + std::to_string(dummy));
    return it->second;
}

std::vector<VertexId> OnePlaneEmbedding::planar_vertices() const {
    std::vector<VertexId> r = g_.vertices();
    for (auto& c : crossings_) r.push_back(c.dummy);
    return r;
}

bool OnePlaneEmbedding::crossed(EdgeId e) const {
    auto it = edge_segs_.find(e);
    return it != edge_segs_.end() && it->second.size() > 1;
}

std::vector<int> OnePlaneEmbedding::segments_of(EdgeId e) const {
    auto it = edge_segs_.find(e);
    if (it == edge_segs_.end()) throw InvalidEmbedding("unknown edge " + std::to_string(e));
    return it->second;
}

int OnePlaneEmbedding::next(int h) const {
    if (!consistent_) throw InvalidEmbedding("inconsistent rotation system");
    return succ_[h ^ 1];
}

const std::vector<std::vector<int>>& OnePlaneEmbedding::faces() const {
    if (!consistent_) throw InvalidEmbedding("inconsistent rotation system");
    return faces_;
}

int OnePlaneEmbedding::face_of(int h) const {
    if (!consistent_) throw InvalidEmbedding("inconsistent rotation system");
    return face_of_.at(h);
}

EdgeSet OnePlaneEmbedding::face_edges(int f) const {
    EdgeSet s(g_.edge_bound());
    for (int h : faces().at(f)) s.flip(edge_of(h));
    return s;
}

std::vector<VertexId> OnePlaneEmbedding::face_vertices(int f) const {
    std::vector<VertexId> r;
    for (int h : faces().at(f)) r.push_back(origin(h));
    return r;
}

int OnePlaneEmbedding::dart_from(EdgeId e, VertexId from) const {
    auto segs = segments_of(e);
    if (segs.size() != 1) throw InvalidEmbedding("edge is crossed");
    int p = segs[0];
    if (segs_[p].tail == from) return 2 * p;
    if (segs_[p].head == from) return 2 * p + 1;
    throw InvalidEmbedding("vertex not on edge");
}

// ---------------------------------------------------------------- validation

bool euler_ok(const OnePlaneEmbedding& e) {
    if (!e.consistent()) return false;
    // union-find over planarization vertices
    std::map<VertexId, VertexId> par;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    for (VertexId v : e.planar_vertices()) par[v] = v;
    for (auto& s : e.segments()) par[find(s.tail)] = find(s.head);
    std::map<VertexId, std::array<long, 3>> cnt;  // V, E, F per root
    for (VertexId v : e.planar_vertices()) cnt[find(v)][0]++;
    for (auto& s : e.segments()) cnt[find(s.tail)][1]++;
    for (int f = 0; f < e.num_faces(); ++f) cnt[find(e.origin(e.faces()[f][0]))][2]++;
    for (auto& [r, c] : cnt) {
        long F = c[1] == 0 ? 1 : c[2];
        if (c[0] - c[1] + F != 2) return false;
    }
    return true;
}

std::vector<Violation> validate(const OnePlaneEmbedding& e) {
    std::vector<Violation> out;
    const Graph& g = e.graph();
    std::map<EdgeId, int> times;
    for (auto& c : e.crossings()) {
        if (g.has_vertex(c.dummy))
            out.push_back({"dummy id", "dummy " + std::to_string(c.dummy) + " is an abstract vertex"});
        if (!g.has_edge(c.e) || !g.has_edge(c.f)) {
            out.push_back({"crossing edge", "crossing at " + std::to_string(c.dummy) +
                                                " names an unknown edge"});
            continue;
        }
        if (c.e == c.f) out.push_back({"self crossing", "edge " + std::to_string(c.e)});
        times[c.e]++;
        if (c.f != c.e) times[c.f]++;
        const Edge &a = g.edge(c.e), &b = g.edge(c.f);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
            out.push_back({"adjacent crossing", "edges " + std::to_string(c.e) + " and " +
                                                    std::to_string(c.f) + " share an endpoint"});
    }
    for (auto& [ed, t] : times)
        if (t > 1) out.push_back({"edge crossed twice", "edge " + std::to_string(ed)});
    std::set<VertexId> dummies;
    for (auto& c : e.crossings())
        if (!dummies.insert(c.dummy).second)
            out.push_back({"dummy id", "dummy " + std::to_string(c.dummy) + " registered twice"});
    for (auto& s : e.structure_errors_) out.push_back({"rotation", s});
    for (auto& c : e.crossings()) {
        auto it = e.rotations().find(c.dummy);
        size_t deg = it == e.rotations().end() ? 0 : it->second.size();
        if (deg != 4) {
            out.push_back({"dummy degree", "dummy " + std::to_string(c.dummy) + " has degree " +
                                               std::to_string(deg)});
            continue;
        }
        if (!e.consistent()) continue;
        const auto& r = it->second;
        bool alt = true;
        for (int i = 0; i < 4; ++i) {
            EdgeId x = e.edge_of(r[i]), y = e.edge_of(r[(i + 1) % 4]);
            if (x == y) alt = false;
        }
        if (!alt || e.edge_of(r[0]) != e.edge_of(r[2]))
            out.push_back({"dummy alternation", "dummy " + std::to_string(c.dummy)});
    }
    if (e.consistent()) {
        if (!euler_ok(e)) out.push_back({"euler", "face count violates Euler's formula"});
        if (e.outer_face() && (*e.outer_face() < 0 || *e.outer_face() >= e.num_faces()))
            out.push_back({"outer face", "outer face id out of range"});
    }
    return out;
}

void require_valid(const OnePlaneEmbedding& e) {
    auto v = validate(e);
    if (!v.empty()) throw InvalidEmbedding("invalid embedding: " + v[0].kind + ": " + v[0].detail);
}

OnePlaneEmbedding plane_embedding(Graph g, const std::map<VertexId, std::vector<int>>& rotations,
                                  std::optional<int> outer_face) {
    return OnePlaneEmbedding(std::move(g), {}, rotations, outer_face);
}

std::optional<OnePlaneEmbedding> planar_embedding(const Graph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
    std::map<VertexId, int> idx;
    std::vector<VertexId> back;
    for (VertexId v : g.vertices()) {
        idx[v] = (int)back.size();
        back.push_back(v);
    }
    BG bg(back.size());
    std::vector<EdgeId> eid;
    for (auto& e : g.edges()) {
        if (e.loop()) throw GraphError("planar_embedding does not take loops");
        boost::add_edge(idx[e.u], idx[e.v], (int)eid.size(), bg);
        eid.push_back(e.id);
    }
    using ED = boost::graph_traits<BG>::edge_descriptor;
    std::vector<std::vector<ED>> emb(back.size());
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &emb[0]))
        return std::nullopt;
    OnePlaneEmbedding tmp(g, {}, {});
    std::map<VertexId, std::vector<int>> rot;
    auto eidx = boost::get(boost::edge_index, bg);
    for (size_t i = 0; i < back.size(); ++i)
        for (auto& ed : emb[i]) rot[back[i]].push_back(tmp.dart_from(eid[eidx[ed]], back[i]));
    return OnePlaneEmbedding(g, {}, rot);
}

// ---------------------------------------------------------------- drafts

EmbeddingDraft EmbeddingDraft::from(const OnePlaneEmbedding& e) {
    EmbeddingDraft d;
    d.graph = e.graph();
    d.crossings = e.crossings();
    for (auto& [v, darts] : e.rotations())
        for (int h : darts) {
            auto& s = e.segments()[h >> 1];
            d.rot[v].push_back({s.edge, s.index, bool(h & 1)});
        }
    return d;
}

OnePlaneEmbedding EmbeddingDraft::build() const {
    OnePlaneEmbedding tmp(graph, crossings, {});
    std::map<std::pair<EdgeId, int>, int> segno;
    for (int p = 0; p < (int)tmp.segments().size(); ++p) {
        auto& s = tmp.segments()[p];
        segno[{s.edge, s.index}] = p;
    }
    std::map<VertexId, std::vector<int>> r;
    for (auto& [v, keys] : rot) {
        auto& out = r[v];
        for (auto& k : keys) {
            auto it = segno.find({k.edge, k.seg});
            if (it == segno.end()) throw InvalidEmbedding("draft names a missing segment");
            out.push_back(2 * it->second + (k.rev ? 1 : 0));
        }
    }
    return OnePlaneEmbedding(graph, crossings, std::move(r));
}

void EmbeddingDraft::remove_edges(const std::set<EdgeId>& edges) {
    std::vector<Crossing> keep;
    std::set<VertexId> dead;
    for (auto& c : crossings) {
        bool de = edges.count(c.e), df = edges.count(c.f);
        if (!de && !df) {
            keep.push_back(c);
            continue;
        }
        dead.insert(c.dummy);
        EdgeId surv = de ? (df ? -1 : c.f) : c.e;
        if (surv >= 0) {
            // segment 1 of the survivor disappears; its far end now sees seg 0
            VertexId far = graph.edge(surv).v;
            for (auto& k : rot[far])
                if (k.edge == surv && k.seg == 1) k.seg = 0;
        }
    }
    for (VertexId x : dead) rot.erase(x);
    for (auto& [v, keys] : rot)
        keys.erase(std::remove_if(keys.begin(), keys.end(),
                                  [&](const DartKey& k) { return edges.count(k.edge) > 0; }),
                   keys.end());
    crossings = keep;
    for (EdgeId x : edges) graph.remove_edge(x);
}

// ---------------------------------------------------------------- queries

Graph skeleton(const OnePlaneEmbedding& e) {
    require_valid(e);
    std::vector<EdgeId> keep;
    for (auto& ed : e.graph().edges())
        if (!e.crossed(ed.id)) keep.push_back(ed.id);
    return edge_subgraph(e.graph(), keep);
}

OnePlaneEmbedding skeleton_embedding(const OnePlaneEmbedding& e) {
    require_valid(e);
    auto d = EmbeddingDraft::from(e);
    std::set<EdgeId> gone;
    for (auto& c : e.crossings()) {
        gone.insert(c.e);
        gone.insert(c.f);
    }
    d.remove_edges(gone);
    // the skeleton keeps every abstract edge id but the crossed ones; rebuild
    // on the full-vertex skeleton graph
    return d.build();
}

std::vector<Cell> cells(const OnePlaneEmbedding& e) {
    require_valid(e);
    std::vector<Cell> out;
    for (int f = 0; f < e.num_faces(); ++f) {
        Cell c{f, e.faces()[f], e.face_vertices(f), false};
        for (VertexId v : c.vertices)
            if (e.is_dummy(v)) c.crossed = true;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// callers have validated e; validate() is linear, so classify must not pay
// for it once per crossing
std::array<SkirtWalk, 4> walks_of(const OnePlaneEmbedding& e, VertexId x) {
    const auto& r = e.rotations().at(x);
    std::array<SkirtWalk, 4> out;
    for (int i = 0; i < 4; ++i) {
        int h = r[(i + 1) % 4];
        SkirtWalk w;
        w.crossing = x;
        w.side = i;
        w.face = e.face_of(h);
        w.vertices.push_back(e.head(h));
        int c = e.next(h);
        while (e.head(c) != x) {
            w.darts.push_back(c);
            w.edge_ids.push_back(e.edge_of(c));
            w.vertices.push_back(e.head(c));
            c = e.next(c);
        }
        w.from = w.vertices.front();
        w.to = w.vertices.back();
        out[i] = std::move(w);
    }
    return out;
}

}  // namespace

std::array<SkirtWalk, 4> skirt_walks(const OnePlaneEmbedding& e, VertexId x) {
    require_valid(e);
    if (!e.is_dummy(x)) throw InvalidEmbedding("not a dummy: " + std::to_string(x));
    return walks_of(e, x);
}

CrossingFrame crossing_frame(const OnePlaneEmbedding& e, VertexId x) {
    require_valid(e);
    const auto& r = e.rotations().at(x);
    CrossingFrame f;
    for (int i = 0; i < 4; ++i) f.u[i] = e.head(r[i]);
    f.chord02 = e.edge_of(r[0]);
    f.chord13 = e.edge_of(r[1]);
    return f;
}

namespace {

std::vector<VertexId> crossing_ends(const OnePlaneEmbedding& e, const Crossing& c) {
    const Edge &a = e.graph().edge(c.e), &b = e.graph().edge(c.f);
    std::vector<VertexId> r{a.u, a.v, b.u, b.v};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

// most vertices shared by two sets with different owners, counted through a
// vertex index instead of comparing every pair of sets; stops at `cap`
int max_shared(const std::vector<std::pair<int, std::vector<VertexId>>>& sets, int cap) {
    std::map<VertexId, std::vector<int>> at;
    for (int i = 0; i < (int)sets.size(); ++i) {
        std::vector<VertexId> vs = sets[i].second;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (VertexId v : vs) at[v].push_back(i);
    }
    std::map<std::pair<int, int>, int> shared;
    int best = 0;
    for (auto& [v, l] : at)
        for (size_t a = 0; a < l.size(); ++a)
            for (size_t b = a + 1; b < l.size(); ++b)
                if (sets[l[a]].first != sets[l[b]].first) {
                    best = std::max(best, ++shared[{l[a], l[b]}]);
                    if (best >= cap) return best;
                }
    return best;
}

std::variant<EdgeSet, NotPoppy> surrounding_cycle_of(const OnePlaneEmbedding& e, VertexId x) {
    auto walks = walks_of(e, x);
    std::vector<VertexId> verts;
    std::vector<int> darts;
    for (auto& w : walks) {
        for (VertexId v : w.vertices)
            if (e.is_dummy(v)) return NotPoppy{};
        if (w.darts.empty()) return NotPoppy{};
        verts.insert(verts.end(), w.vertices.begin(), w.vertices.end() - 1);
        darts.insert(darts.end(), w.darts.begin(), w.darts.end());
    }
    auto sv = verts;
    std::sort(sv.begin(), sv.end());
    if (std::adjacent_find(sv.begin(), sv.end()) != sv.end()) return NotPoppy{};
    std::vector<EdgeId> eds;
    for (int h : darts) eds.push_back(e.edge_of(h));
    std::sort(eds.begin(), eds.end());
    if (std::adjacent_find(eds.begin(), eds.end()) != eds.end()) return NotPoppy{};
    return EdgeSet::of(e.graph().edge_bound(), eds);
}

}  // namespace

std::variant<EdgeSet, NotPoppy> crossing_surrounding_cycle(const OnePlaneEmbedding& e, VertexId x) {
    require_valid(e);
    if (!e.is_dummy(x)) throw InvalidEmbedding("not a dummy: " + std::to_string(x));
    return surrounding_cycle_of(e, x);
}

bool is_poppy(const OnePlaneEmbedding& e, VertexId x) {
    return std::holds_alternative<EdgeSet>(crossing_surrounding_cycle(e, x));
}

EmbeddingProfile classify(const OnePlaneEmbedding& e) {
    require_valid(e);
    EmbeddingProfile p;
    const Graph& g = e.graph();
    const auto& cr = e.crossings();
    p.crossings = (int)cr.size();
    std::vector<std::vector<VertexId>> ends;
    std::vector<std::pair<int, std::vector<VertexId>>> owned_ends;
    for (auto& c : cr) {
        ends.push_back(crossing_ends(e, c));
        owned_ends.emplace_back((int)owned_ends.size(), ends.back());
    }
    int k = max_shared(owned_ends, 2);
    p.ic = k < 1;
    p.nic = k < 2;
    // adjacency in the abstract graph
    auto adjacent = [&](VertexId a, VertexId b) {
        for (EdgeId x : g.incident(a))
            if (g.edge(x).other(a) == b) return true;
        return false;
    };
    p.locally_maximal = true;
    for (auto& en : ends)
        for (size_t i = 0; i < en.size(); ++i)
            for (size_t j = i + 1; j < en.size(); ++j)
                if (!adjacent(en[i], en[j])) p.locally_maximal = false;
    p.poppy = true;
    bool single = true;
    std::vector<std::pair<int, std::vector<VertexId>>> walk_sets;
    for (size_t i = 0; i < cr.size(); ++i) {
        if (!std::holds_alternative<EdgeSet>(surrounding_cycle_of(e, cr[i].dummy))) p.poppy = false;
        for (auto& w : walks_of(e, cr[i].dummy)) {
            if (w.darts.size() != 1) single = false;
            walk_sets.emplace_back((int)i, w.vertices);
        }
    }
    p.full_crossing = p.poppy && single;
    p.near_independent_skirts = max_shared(walk_sets, 2) < 2;
    p.connected_skeleton = num_components(skeleton(e)) == num_components(g);
    // optimal: simple, m = 4n-8, every cell = one dummy + two real vertices
    p.optimal = g.simple() && g.m() == 4 * g.n() - 8 && !cr.empty();
    if (p.optimal)
        for (auto& c : cells(e)) {
            int d = 0, r = 0;
            for (VertexId v : c.vertices) (e.is_dummy(v) ? d : r)++;
            if (d != 1 || r != 2) p.optimal = false;
        }
    return p;
}

// ---------------------------------------------------------------- repair

OnePlaneEmbedding repair_locally_maximal(const OnePlaneEmbedding& input) {
    require_valid(input);
    if (!classify(input).locally_maximal)
        throw InvalidEmbedding("repair_locally_maximal needs a locally maximal embedding");
    OnePlaneEmbedding cur = input;
    const int cap = input.graph().m();
    for (int iter = 0; iter < cap; ++iter) {
        if (num_components(skeleton(cur)) == num_components(cur.graph())) return cur;
        // first crossing (registry order) with a K4 side that is crossed
        // elsewhere; sides taken in rotation order
        bool moved = false;
        for (auto& c : cur.crossings()) {
            VertexId x = c.dummy;
            auto fr = crossing_frame(cur, x);
            const auto& rx = cur.rotations().at(x);
            for (int i = 0; i < 4 && !moved; ++i) {
                VertexId a = fr.u[i], b = fr.u[(i + 1) % 4];
                EdgeId side = -1;
                for (EdgeId ed : cur.graph().incident(a))
                    if (cur.graph().edge(ed).other(a) == b && cur.crossed(ed)) {
                        side = ed;
                        break;
                    }
                if (side < 0) continue;
                // corners: in the face of the dart x->b (rx[i+1]) the walk runs
                // b .. a then back to x
                int hb = rx[(i + 1) % 4];  // x -> b
                int ha = rx[i];            // x -> a
                auto d = EmbeddingDraft::from(cur);
                auto key = [&](int h) {
                    auto& s = cur.segments()[h >> 1];
                    return DartKey{s.edge, s.index, bool(h & 1)};
                };
                DartKey b_to_x = key(hb ^ 1), a_to_x = key(ha ^ 1);
                // drop the side and its crossing, then add it back uncrossed
                Edge se = cur.graph().edge(side);
                d.remove_edges({side});
                d.graph.add_edge_with_id(side, se.u, se.v);
                DartKey fwd{side, 0, false}, bwd{side, 0, true};
                DartKey at_a = se.u == a ? fwd : bwd;
                DartKey at_b = se.u == a ? bwd : fwd;
                // at b: right after b->x; at a: right before a->x
                auto& rb = d.rot[b];
                auto pb = std::find(rb.begin(), rb.end(), b_to_x);
                rb.insert(pb + 1, at_b);
                auto& ra = d.rot[a];
                auto pa = std::find(ra.begin(), ra.end(), a_to_x);
                ra.insert(pa, at_a);
                OnePlaneEmbedding cand = d.build();
                if (validate(cand).empty()) {
                    cur = cand;
                    moved = true;
                }
            }
            if (moved) break;
        }
        if (!moved) break;
    }
    return cur;
}

// ---------------------------------------------------------------- dot

std::string to_dot(const OnePlaneEmbedding& e) {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v : e.graph().vertices()) os << "  " << v << ";\n";
    for (auto& c : e.crossings())
        os << "  " << c.dummy << " [shape=square, width=0.1, label=\"\"];\n";
    for (auto& s : e.segments())
        os << "  " << s.tail << " -- " << s.head << " [label=\"" << s.edge << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace kb
