#include "kbasis/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>
#include <random>
#include <set>

namespace kb {

void require_basis(const Graph& g, const Basis& b) {
    auto r = verify_kbasis(g, b, std::numeric_limits<int>::max());
    if (!r.all_eulerian || !r.independent || !r.generates)
        throw PreconditionError("not a basis of the graph");
}

Transported contract_basis(const Graph& g, const Basis& b, EdgeId e) {
    require_basis(g, b);
    if (!g.has_edge(e)) throw PreconditionError("no edge " + std::to_string(e));
    if (g.edge(e).loop()) throw PreconditionError("loops are not contractible");
    Transported out{contract(g, e).graph, b};
    for (auto& s : out.basis) s.reset(e);
    return out;
}

namespace {

// BFS path from u to v, neighbours visited by (vertex id, edge id)
std::vector<EdgeId> shortest_path(const Graph& g, VertexId u, VertexId v) {
    std::vector<EdgeId> via(g.vertex_bound(), -1);
    std::vector<char> seen(g.vertex_bound(), 0);
    std::deque<VertexId> q{u};
    seen[u] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        if (x == v) break;
        std::vector<std::pair<VertexId, EdgeId>> nb;
        for (EdgeId e : g.incident(x)) nb.emplace_back(g.edge(e).other(x), e);
        std::sort(nb.begin(), nb.end());
        for (auto [y, e] : nb)
            if (!seen[y]) {
                seen[y] = 1;
                via[y] = e;
                q.push_back(y);
            }
    }
    if (!seen[v]) throw PreconditionError("vertices are not connected");
    std::vector<EdgeId> path;
    for (VertexId x = v; x != u;) {
        EdgeId e = via[x];
        path.push_back(e);
        x = g.edge(e).other(x);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Transported add_edge_basis(const Graph& g, const Basis& b, VertexId u, VertexId v) {
    require_basis(g, b);
    if (!connected(g)) throw PreconditionError("graph is not connected");
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw PreconditionError("unknown vertex");
    Transported out{g, b};
    EdgeId ne = out.graph.add_edge(u, v);
    EdgeSet c(out.graph.edge_bound());
    c.flip(ne);
    if (u != v)
        for (EdgeId e : shortest_path(g, u, v)) c.flip(e);
    out.basis.push_back(c);
    return out;
}

Transported duplicate_edge_basis(const Graph& g, const Basis& b, EdgeId e) {
    require_basis(g, b);
    if (!g.has_edge(e)) throw PreconditionError("no edge " + std::to_string(e));
    const Edge ed = g.edge(e);
    Transported out{g, b};
    EdgeId twin = out.graph.add_edge(ed.u, ed.v);
    // the parallel pair's paths alternate between e and its copy
    int i = 0;
    for (auto& s : out.basis)
        if (s.test(e)) {
            if (i++ % 2 == 1) {
                s.reset(e);
                s.set(twin);
            }
        }
    out.basis.push_back(EdgeSet::of(out.graph.edge_bound(), {e, twin}));
    return out;
}

Transported subdivide_basis(const Graph& g, const Basis& b, EdgeId e) {
    require_basis(g, b);
    if (!g.has_edge(e)) throw PreconditionError("no edge " + std::to_string(e));
    auto sd = subdivide(g, e);
    Transported out{sd.graph, b};
    for (auto& s : out.basis)
        if (s.test(e)) {
            s.reset(e);
            s.set(sd.first);
            s.set(sd.second);
        }
    return out;
}

// ---------------------------------------------------------------- Prop 1

void require_terminal(const TerminalGraph& h) {
    if (h.s == h.t) throw PreconditionError("terminals must differ");
    if (!h.graph.has_vertex(h.s) || !h.graph.has_vertex(h.t))
        throw PreconditionError("terminal not in graph");
    if (!connected(h.graph)) throw PreconditionError("terminal graph must be connected");
}

namespace {

bool is_simple_path(const Graph& g, const EdgeSet& p, VertexId s, VertexId t) {
    check_edges(g, p);
    auto ids = p.ids();
    if (ids.empty()) return false;
    std::map<VertexId, int> deg;
    for (EdgeId e : ids) {
        if (g.edge(e).loop()) return false;
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    for (auto [v, d] : deg) {
        if (v == s || v == t) {
            if (d != 1) return false;
        } else if (d != 2) {
            return false;
        }
    }
    if (!deg.count(s) || !deg.count(t)) return false;
    // one component: walk from s
    VertexId cur = s, prev_e = -1;
    size_t steps = 0;
    while (cur != t) {
        EdgeId nxt = -1;
        for (EdgeId e : ids)
            if (e != prev_e && (g.edge(e).u == cur || g.edge(e).v == cur)) nxt = e;
        if (nxt < 0) return false;
        cur = g.edge(nxt).other(cur);
        prev_e = nxt;
        if (++steps > ids.size()) return false;
    }
    return steps == ids.size();
}

}  // namespace

int augmented_charge(const Graph& g, const AugmentedBasis& ab) {
    std::vector<EdgeSet> all = ab.basis;
    all.insert(all.end(), ab.paths.begin(), ab.paths.end());
    return max_charge(charges(g, all));
}

Replaced replace_edge_basis(const Graph& g, const Basis& b, EdgeId e, const TerminalGraph& h,
                            const AugmentedBasis& ab) {
    require_basis(g, b);
    require_terminal(h);
    require_basis(h.graph, ab.basis);
    if (!g.has_edge(e)) throw PreconditionError("no edge " + std::to_string(e));
    const Edge ed = g.edge(e);
    if (ed.loop()) throw PreconditionError("cannot replace a loop");
    for (auto& p : ab.paths)
        if (!is_simple_path(h.graph, p, h.s, h.t))
            throw PreconditionError("augmented basis path is not a simple s-t path");
    std::vector<int> users;
    for (int i = 0; i < (int)b.size(); ++i)
        if (b[i].test(e)) users.push_back(i);
    if (users.size() != ab.paths.size())
        throw PreconditionError("need " + std::to_string(users.size()) + " paths, got " +
                                std::to_string(ab.paths.size()));
    Replaced out;
    out.graph = g;
    out.graph.remove_edge(e);
    out.vmap[h.s] = ed.u;
    out.vmap[h.t] = ed.v;
    for (VertexId v : h.graph.vertices())
        if (!out.vmap.count(v)) out.vmap[v] = out.graph.add_vertex();
    for (auto& x : h.graph.edges())
        out.emap[x.id] = out.graph.add_edge(out.vmap[x.u], out.vmap[x.v]);
    auto lift = [&](const EdgeSet& s) {
        EdgeSet r(out.graph.edge_bound());
        for (EdgeId x : s.ids()) r.flip(out.emap.at(x));
        return r;
    };
    int j = 0;
    for (int i = 0; i < (int)b.size(); ++i) {
        EdgeSet s = b[i];
        if (s.test(e)) {
            s.reset(e);
            s ^= lift(ab.paths[j++]);
        }
        out.basis.push_back(s);
    }
    for (auto& s : ab.basis) out.basis.push_back(lift(s));
    return out;
}

// ---------------------------------------------------------------- augmented

std::vector<EdgeSet> simple_paths(const Graph& g, VertexId s, VertexId t, long long cap) {
    std::vector<EdgeSet> out;
    std::vector<char> on(g.vertex_bound(), 0);
    EdgeSet cur(g.edge_bound());
    std::function<void(VertexId)> go = [&](VertexId x) {
        if (x == t) {
            if ((long long)out.size() >= cap) throw CapExceeded("too many s-t paths");
            out.push_back(cur);
            return;
        }
        on[x] = 1;
        for (EdgeId e : g.incident(x)) {
            VertexId y = g.edge(e).other(x);
            if (on[y] || y == x) continue;
            cur.flip(e);
            go(y);
            cur.flip(e);
        }
        on[x] = 0;
    };
    go(s);
    std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

namespace {

AugmentedBasis augmented_exact(const TerminalGraph& h, int ell, const SearchBudget& budget) {
    const Graph& g = h.graph;
    int beta = betti(g);
    if (beta > 8) throw CapExceeded("exact mode needs betti <= 8");
    auto elems = sorted_cycle_space(g, 1 << 8);
    auto paths = simple_paths(g, h.s, h.t, 4096);
    if (ell > 0 && paths.empty()) throw PreconditionError("no s-t path");
    int w = g.edge_bound();
    for (int k = (beta == 0 && ell == 0) ? 0 : 1; k <= beta + ell; ++k) {
        std::set<std::vector<int>> tried;
        std::vector<int> use(w, 0), pick;
        std::optional<AugmentedBasis> found;
        bool over = false;
        // multisets of ell paths in nondecreasing index order
        std::function<void(int)> go = [&](int from) {
            if (found || over) return;
            if ((int)pick.size() == ell) {
                if (!tried.insert(use).second) return;
                std::vector<int> capv(w);
                for (int i = 0; i < w; ++i) capv[i] = k - use[i];
                auto r = search_basis(g, elems, capv, budget);
                if (r.outcome == SearchOutcome::Budget) over = true;
                if (r.outcome == SearchOutcome::Found) {
                    AugmentedBasis ab;
                    ab.basis = r.witness;
                    for (int i : pick) ab.paths.push_back(paths[i]);
                    ab.k = k;
                    found = ab;
                }
                return;
            }
            for (int i = from; i < (int)paths.size() && !found && !over; ++i) {
                auto ids = paths[i].ids();
                bool ok = true;
                for (EdgeId e : ids)
                    if (use[e] + 1 > k) ok = false;
                if (!ok) continue;
                for (EdgeId e : ids) ++use[e];
                pick.push_back(i);
                go(i);
                pick.pop_back();
                for (EdgeId e : ids) --use[e];
            }
        };
        go(0);
        if (over) throw CapExceeded("search budget exceeded");
        if (found) return *found;
    }
    throw PreconditionError("no augmented basis found");  // unreachable for connected h
}

AugmentedBasis augmented_planar_outer(const TerminalGraph& h, int ell) {
    if (ell != 2) throw PreconditionError("planar_outer mode is for ell = 2");
    const Graph& g = h.graph;
    if (!two_connected(g)) throw PreconditionError("planar_outer mode needs a 2-connected graph");
    Graph plus = g;
    EdgeId st = plus.add_edge(h.s, h.t);
    auto pe = planar_embedding(plus);
    if (!pe) throw PreconditionError("no planar embedding with s and t on a common face");
    EdgeSet target = pe->face_edges(pe->face_of(pe->dart_from(st, h.s))) ^
                     pe->face_edges(pe->face_of(pe->dart_from(st, h.t)));
    target.reset(st);
    auto d = EmbeddingDraft::from(*pe);
    d.remove_edges({st});
    auto emb = d.build();
    int outer = -1;
    for (int f = 0; f < emb.num_faces() && outer < 0; ++f) {
        auto vs = emb.face_vertices(f);
        bool hs = std::find(vs.begin(), vs.end(), h.s) != vs.end();
        bool ht = std::find(vs.begin(), vs.end(), h.t) != vs.end();
        if (hs && ht && emb.face_edges(f) == target) outer = f;
    }
    if (outer < 0) throw PreconditionError("could not place s and t on the outer face");
    emb.set_outer_face(outer);
    AugmentedBasis ab;
    ab.basis = planar_2basis(emb);
    // split the outer cycle at s and t
    const auto& darts = emb.faces()[outer];
    int n = (int)darts.size(), at = 0;
    while (emb.origin(darts[at]) != h.s) ++at;
    EdgeSet p1(g.edge_bound()), p2(g.edge_bound());
    bool first = true;
    for (int i = 0; i < n; ++i) {
        int dd = darts[(at + i) % n];
        if (emb.origin(dd) == h.t) first = false;
        (first ? p1 : p2).flip(emb.edge_of(dd));
    }
    ab.paths = {p1, p2};
    ab.k = augmented_charge(g, ab);
    return ab;
}

}  // namespace

AugmentedBasis augmented_basis_number(const TerminalGraph& h, int ell, AugmentedMode mode,
                                      const SearchBudget& budget) {
    require_terminal(h);
    if (ell < 0) throw PreconditionError("ell must be nonnegative");
    if (mode == AugmentedMode::PlanarOuter) return augmented_planar_outer(h, ell);
    return augmented_exact(h, ell, budget);
}

// ---------------------------------------------------------------- schedules

void check_schedule(const Graph& g, const CrossingSchedule& s) {
    auto bad = [](const std::string& m) { throw InconsistentSchedule(m); };
    std::map<EdgeId, std::multiset<int>> expect;
    for (int j = 0; j < (int)s.crossings.size(); ++j) {
        auto [e, f] = s.crossings[j];
        if (!g.has_edge(e) || !g.has_edge(f)) bad("crossing " + std::to_string(j) + ": unknown edge");
        if (e == f) bad("crossing " + std::to_string(j) + ": edge crosses itself");
        auto &a = g.edge(e), &b = g.edge(f);
        if (a.loop() || b.loop()) bad("loops cannot cross");
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
            bad("crossing " + std::to_string(j) + ": adjacent edges");
        expect[e].insert(j);
        expect[f].insert(j);
    }
    for (auto& [e, js] : expect) {
        auto it = s.order.find(e);
        std::multiset<int> got;
        if (it != s.order.end()) got.insert(it->second.begin(), it->second.end());
        if (got != js) bad("edge " + std::to_string(e) + ": crossing order does not match");
    }
    for (auto& [e, js] : s.order)
        if (!js.empty() && !expect.count(e)) bad("edge " + std::to_string(e) + ": stray crossings");
    for (VertexId v : g.vertices()) {
        std::vector<EdgeId> inc = g.incident(v);
        for (EdgeId e : inc)
            if (g.edge(e).loop()) bad("loops are not supported");
        auto it = s.vertex_rot.find(v);
        std::vector<EdgeId> got;
        if (it != s.vertex_rot.end()) got = it->second;
        std::sort(got.begin(), got.end());
        if (got != inc) bad("vertex " + std::to_string(v) + ": rotation does not list its edges");
    }
    if (s.crossing_rot.size() != s.crossings.size()) bad("crossing rotations missing");
    for (int j = 0; j < (int)s.crossings.size(); ++j) {
        auto [e, f] = s.crossings[j];
        const auto& r = s.crossing_rot[j];
        std::set<std::pair<EdgeId, int>> ports;
        for (auto& p : r) ports.insert({p.edge, p.toward});
        std::set<std::pair<EdgeId, int>> want{{e, 0}, {e, 1}, {f, 0}, {f, 1}};
        if (ports != want) bad("crossing " + std::to_string(j) + ": ports do not match its edges");
        for (int i = 0; i < 4; ++i)
            if (r[i].edge == r[(i + 1) % 4].edge)
                bad("crossing " + std::to_string(j) + ": ports do not alternate");
    }
}

CrossingSchedule circular_layout_schedule(const Graph& g, const std::vector<VertexId>& order,
                                          unsigned seed) {
    if (!g.simple()) throw std::invalid_argument("circular layout needs a simple graph");
    std::vector<VertexId> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::vector<VertexId> vs = g.vertices();
    std::sort(vs.begin(), vs.end());
    if (sorted_order != vs) throw std::invalid_argument("order must list every vertex once");
    int n = (int)order.size();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jit(-0.25, 0.25);
    std::map<VertexId, std::pair<double, double>> pos;
    std::map<VertexId, int> slot;
    for (int i = 0; i < n; ++i) {
        double a = 2 * std::numbers::pi * (i + jit(rng)) / std::max(n, 1);
        pos[order[i]] = {std::cos(a), std::sin(a)};
        slot[order[i]] = i;
    }
    CrossingSchedule s;
    const auto& E = g.edges();
    // intersection parameters along each edge
    std::map<EdgeId, std::vector<std::pair<double, int>>> along;
    std::vector<std::pair<double, double>> at;
    auto inside = [&](int a, int b, int x) {  // x strictly between a and b going up
        int d1 = (x - a + n) % n, d2 = (b - a + n) % n;
        return d1 > 0 && d1 < d2;
    };
    for (size_t i = 0; i < E.size(); ++i)
        for (size_t j = i + 1; j < E.size(); ++j) {
            const Edge &e = E[i], &f = E[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            int a = slot[e.u], b = slot[e.v];
            if (inside(a, b, slot[f.u]) == inside(a, b, slot[f.v])) continue;
            auto [x1, y1] = pos[e.u];
            auto [x2, y2] = pos[e.v];
            auto [x3, y3] = pos[f.u];
            auto [x4, y4] = pos[f.v];
            double den = (x2 - x1) * (y4 - y3) - (y2 - y1) * (x4 - x3);
            double te = ((x3 - x1) * (y4 - y3) - (y3 - y1) * (x4 - x3)) / den;
            double tf = ((x3 - x1) * (y2 - y1) - (y3 - y1) * (x2 - x1)) / den;
            int id = (int)s.crossings.size();
            s.crossings.push_back({e.id, f.id});
            along[e.id].push_back({te, id});
            along[f.id].push_back({tf, id});
            at.push_back({x1 + te * (x2 - x1), y1 + te * (y2 - y1)});
        }
    for (auto& [e, v] : along) {
        std::sort(v.begin(), v.end());
        for (auto& [t, id] : v) s.order[e].push_back(id);
    }
    auto by_angle = [](double cx, double cy, std::vector<std::pair<double, double>> pts) {
        std::vector<std::pair<double, int>> a;
        for (int i = 0; i < (int)pts.size(); ++i)
            a.push_back({std::atan2(pts[i].second - cy, pts[i].first - cx), i});
        std::sort(a.begin(), a.end());
        std::vector<int> idx;
        for (auto& p : a) idx.push_back(p.second);
        return idx;
    };
    for (VertexId v : g.vertices()) {
        auto inc = g.incident(v);
        std::vector<std::pair<double, double>> pts;
        for (EdgeId e : inc) pts.push_back(pos[g.edge(e).other(v)]);
        for (int i : by_angle(pos[v].first, pos[v].second, pts)) s.vertex_rot[v].push_back(inc[i]);
    }
    s.crossing_rot.resize(s.crossings.size());
    for (int j = 0; j < (int)s.crossings.size(); ++j) {
        auto [e, f] = s.crossings[j];
        std::array<Port, 4> ports{Port{e, 0}, Port{e, 1}, Port{f, 0}, Port{f, 1}};
        std::vector<std::pair<double, double>> pts{pos[g.edge(e).u], pos[g.edge(e).v],
                                                   pos[g.edge(f).u], pos[g.edge(f).v]};
        auto idx = by_angle(at[j].first, at[j].second, pts);
        for (int i = 0; i < 4; ++i) s.crossing_rot[j][i] = ports[idx[i]];
    }
    return s;
}

// ---------------------------------------------------------------- Thm 1

Subdivided make_1planar_by_subdivision(const Graph& g, const CrossingSchedule& s,
                                       SubdivisionPolicy policy) {
    check_schedule(g, s);
    Subdivided out;
    Graph h;
    for (VertexId v : g.vertices()) h.add_vertex(v);
    h.reserve_ids(g.vertex_bound(), g.edge_bound());
    for (auto& e : g.edges())
        if (!s.order.count(e.id) || s.order.at(e.id).empty()) h.add_edge_with_id(e.id, e.u, e.v);
    // crossed edges incident to each vertex
    std::map<VertexId, int> crossed_at;
    for (auto& [e, js] : s.order)
        if (!js.empty()) {
            crossed_at[g.edge(e).u]++;
            crossed_at[g.edge(e).v]++;
        }
    bool indep = policy == SubdivisionPolicy::IndependentCrossings;
    int gap = indep ? 2 : 1;
    // node sequences: vertex ids >= 0, crossing j encoded as -(j+1)
    std::map<EdgeId, std::vector<int>> seq;
    auto fresh = [&] {
        VertexId x = h.add_vertex();
        out.subdivision_vertices.push_back(x);
        return x;
    };
    for (auto& e : g.edges()) {
        auto it = s.order.find(e.id);
        if (it == s.order.end() || it->second.empty()) {
            seq[e.id] = {e.u, e.v};
            continue;
        }
        auto& q = seq[e.id];
        q.push_back(e.u);
        if (indep && crossed_at[e.u] >= 2) q.push_back(fresh());
        const auto& js = it->second;
        for (size_t k = 0; k < js.size(); ++k) {
            if (k > 0)
                for (int z = 0; z < gap; ++z) q.push_back(fresh());
            q.push_back(-(js[k] + 1));
        }
        if (indep && crossed_at[e.v] >= 2) q.push_back(fresh());
        q.push_back(e.v);
    }
    // pieces between consecutive real nodes
    std::vector<std::array<EdgeId, 2>> piece_of(s.crossings.size(), {-1, -1});
    for (auto& e : g.edges()) {
        const auto& q = seq[e.id];
        if (q.size() == 2 && q[0] >= 0 && q[1] >= 0 && h.has_edge(e.id)) continue;
        size_t a = 0;
        bool first = true;  // the first piece keeps e's id, so unsubdividing restores it
        while (a + 1 < q.size()) {
            size_t b = a + 1;
            int dummy = -1;
            if (q[b] < 0) {
                dummy = -q[b] - 1;
                ++b;
            }
            EdgeId pe = e.id;
            if (first)
                h.add_edge_with_id(e.id, q[a], q[b]);
            else
                pe = h.add_edge(q[a], q[b]);
            first = false;
            if (dummy >= 0) {
                int side = s.crossings[dummy].first == e.id ? 0 : 1;
                piece_of[dummy][side] = pe;
            }
            a = b;
        }
    }
    VertexId dummy_base = h.vertex_bound();
    auto node = [&](int x) { return x >= 0 ? x : dummy_base + (-x - 1); };
    std::map<VertexId, std::vector<VertexId>> rot;
    for (VertexId v : g.vertices()) {
        auto it = s.vertex_rot.find(v);
        if (it == s.vertex_rot.end()) continue;
        for (EdgeId e : it->second) {
            const auto& q = seq[e];
            rot[v].push_back(node(g.edge(e).u == v ? q[1] : q[q.size() - 2]));
        }
    }
    for (auto& [e, q] : seq)
        for (size_t i = 1; i + 1 < q.size(); ++i)
            if (q[i] >= 0) rot[q[i]] = {node(q[i - 1]), node(q[i + 1])};
    std::vector<Crossing> cr;
    for (int j = 0; j < (int)s.crossings.size(); ++j) {
        VertexId d = dummy_base + j;
        cr.push_back({d, piece_of[j][0], piece_of[j][1]});
        for (auto& p : s.crossing_rot[j]) {
            const auto& q = seq[p.edge];
            size_t at = std::find(q.begin(), q.end(), -(j + 1)) - q.begin();
            rot[d].push_back(node(p.toward == 0 ? q[at - 1] : q[at + 1]));
        }
    }
    out.embedding = OnePlaneEmbedding::from_neighbors(h, cr, rot);
    out.graph = h;
    for (VertexId x : out.subdivision_vertices) out.chain.push_back({ChainStep::Unsubdivide, x});
    return out;
}

DegreeReduced degree_reduce(const Graph& g) {
    DegreeReduced out{g, {}};
    std::vector<EdgeId> made;
    bool again = true;
    while (again) {
        again = false;
        for (VertexId v : std::vector<VertexId>(out.graph.vertices())) {
            int d = out.graph.degree(v);
            if (d <= 3) continue;
            auto inc = out.graph.incident(v);
            for (EdgeId e : inc)
                if (out.graph.edge(e).loop()) throw GraphError("degree_reduce does not take loops");
            int keep = (d + 1) / 2;
            std::vector<EdgeId> stay(inc.begin(), inc.begin() + keep), move(inc.begin() + keep, inc.end());
            auto sp = vertex_split(out.graph, v, stay, move);
            out.graph = sp.graph;
            made.push_back(sp.new_edge);
            again = true;
        }
    }
    for (auto it = made.rbegin(); it != made.rend(); ++it)
        out.chain.push_back({ChainStep::Contract, *it});
    return out;
}

}  // namespace kb
