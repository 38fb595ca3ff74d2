#include "kbasis/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kb {

namespace {

void require_plane(const OnePlaneEmbedding& e) {
    require_valid(e);
    if (!e.crossings().empty()) throw PreconditionError("embedding has crossings");
}

// plane embedding of the abstract graph minus `drop`
OnePlaneEmbedding without(const OnePlaneEmbedding& e, const std::set<EdgeId>& drop) {
    auto d = EmbeddingDraft::from(e);
    d.remove_edges(drop);
    return d.build();
}

bool subgraph_of(const Graph& h, const Graph& g) {
    for (auto& x : h.edges()) {
        if (!g.has_edge(x.id)) return false;
        auto& y = g.edge(x.id);
        if (std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) return false;
    }
    for (VertexId v : h.vertices())
        if (!g.has_vertex(v)) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- facial

std::vector<EdgeSet> facial_cycles(const OnePlaneEmbedding& plane) {
    require_plane(plane);
    std::vector<EdgeSet> out;
    for (int f = 0; f < plane.num_faces(); ++f) out.push_back(plane.face_edges(f));
    return out;
}

int outer_face_choice(const OnePlaneEmbedding& plane) {
    if (plane.outer_face()) return *plane.outer_face();
    int best = -1;
    for (int f = 0; f < plane.num_faces(); ++f)
        if (best < 0 || plane.faces()[f].size() > plane.faces()[best].size()) best = f;
    return best;
}

Basis facial_basis(const OnePlaneEmbedding& plane) {
    require_plane(plane);
    const Graph& g = plane.graph();
    auto comp = component_labels(g);
    // one face dropped per component: the outer face where it applies,
    // otherwise the longest
    std::map<int, int> drop;
    for (int f = 0; f < plane.num_faces(); ++f) {
        int c = comp[plane.origin(plane.faces()[f][0])];
        auto it = drop.find(c);
        if (it == drop.end() || plane.faces()[f].size() > plane.faces()[it->second].size())
            drop[c] = f;
    }
    if (plane.outer_face()) drop[comp[plane.origin(plane.faces()[*plane.outer_face()][0])]] =
        *plane.outer_face();
    std::set<int> dropped;
    for (auto& [c, f] : drop) dropped.insert(f);
    Basis out;
    for (int f = 0; f < plane.num_faces(); ++f)
        if (!dropped.count(f)) out.push_back(plane.face_edges(f));
    return out;
}

Basis planar_2basis(const OnePlaneEmbedding& plane) {
    require_plane(plane);
    if (!two_connected(plane.graph())) throw PreconditionError("graph is not 2-connected");
    int outer = outer_face_choice(plane);
    Basis out;
    for (int f = 0; f < plane.num_faces(); ++f)
        if (f != outer) out.push_back(plane.face_edges(f));
    return out;
}

// ---------------------------------------------------------------- Lemma 5

Basis union_cover_basis(const Graph& g, const Graph& g1, const Graph& g2, const Basis& b1,
                        const Basis& b2) {
    if (!subgraph_of(g1, g) || !subgraph_of(g2, g))
        throw PreconditionError("g1 and g2 must be subgraphs of g");
    std::vector<EdgeId> common;
    for (auto& x : g.edges()) {
        bool in1 = g1.has_edge(x.id), in2 = g2.has_edge(x.id);
        if (!in1 && !in2) throw PreconditionError("edge " + std::to_string(x.id) + " in neither part");
        if (in1 && in2) common.push_back(x.id);
    }
    if (g1.n() != g.n() || g2.n() != g.n()) throw PreconditionError("parts must span g");
    if (!connected(edge_subgraph(g, common)))
        throw PreconditionError("g1 and g2 must meet in a connected spanning subgraph");
    Basis all = b1;
    all.insert(all.end(), b2.begin(), b2.end());
    return extract_basis(g, all);
}

// ---------------------------------------------------------------- Prop 2

Basis connected_skeleton_4basis(const OnePlaneEmbedding& e) {
    require_valid(e);
    const Graph& g = e.graph();
    if (num_components(skeleton(e)) != num_components(g) || !connected(g))
        throw PreconditionError("skeleton is not connected");
    std::set<EdgeId> firsts, seconds;
    for (auto& c : e.crossings()) {
        firsts.insert(c.e);
        seconds.insert(c.f);
    }
    auto p1 = without(e, seconds);  // sk + first edges
    auto p2 = without(e, firsts);   // sk + second edges
    return union_cover_basis(g, p1.graph(), p2.graph(), facial_basis(p1), facial_basis(p2));
}

// ---------------------------------------------------------------- Prop 3

AuxiliaryGraph auxiliary_graph(const OnePlaneEmbedding& e) {
    require_valid(e);
    AuxiliaryGraph a;
    int count = 0;
    a.component = component_labels(skeleton(e), &count);
    a.q = Graph(count);
    const Graph& g = e.graph();
    for (auto& c : e.crossings()) {
        auto& x = g.edge(c.e);
        auto& y = g.edge(c.f);
        auto kx = std::minmax(a.component[x.u], a.component[x.v]);
        auto ky = std::minmax(a.component[y.u], a.component[y.v]);
        if (kx != ky || kx.first == kx.second) continue;
        EdgeId q1 = a.q.add_edge(kx.first, kx.second);
        EdgeId q2 = a.q.add_edge(kx.first, kx.second);
        a.back[q1] = c.e;
        a.back[q2] = c.f;
        a.partner[q1] = q2;
        a.partner[q2] = q1;
    }
    return a;
}

Basis disconnected_skeleton_8basis(const OnePlaneEmbedding& e) {
    require_valid(e);
    const Graph& g = e.graph();
    if (!connected(g)) throw PreconditionError("graph is not connected");
    auto aux = auxiliary_graph(e);
    if (aux.q.n() == 1) return connected_skeleton_4basis(e);
    auto pk = tree_packing(aux.q, 3);
    if (std::holds_alternative<Infeasible>(pk))
        throw PreconditionError("auxiliary graph has no 3 edge-disjoint spanning trees");
    const auto& trees = std::get<TreePacking>(pk);
    std::array<std::set<EdgeId>, 2> drop;
    for (int i = 0; i < 2; ++i)
        for (EdgeId q : trees[i]) drop[i].insert(aux.back.at(q));
    auto e1 = without(e, drop[0]);
    auto e2 = without(e, drop[1]);
    return union_cover_basis(g, e1.graph(), e2.graph(), connected_skeleton_4basis(e1),
                             connected_skeleton_4basis(e2));
}

// ---------------------------------------------------------------- Lemma 8

std::array<K4Cycle, 3> k4_assignment_basis(const std::array<int, 4>& labels) {
    std::array<int, 4> s = labels;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 4>{1, 1, 2, 2})
        throw PreconditionError("assignment must be a permutation of {1,1,2,2}");
    std::array<K4Cycle, 3> out{};
    auto chord = [](K4Cycle& c, int a) {  // chord from u_a to u_{a+2}
        (a % 2 == 0 ? c.chord02 : c.chord13) = true;
    };
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        if (labels[i] == 1 && labels[j] == 1) {
            // star at u_{i+3}
            int i2 = (i + 2) % 4, i3 = (i + 3) % 4;
            out[0].side[i] = out[0].side[i3] = true;
            chord(out[0], j);
            out[1].side[j] = out[1].side[i2] = true;
            chord(out[1], j);
            out[2].side[i3] = out[2].side[i2] = true;
            chord(out[2], i);
            return out;
        }
    }
    if (labels[0] == 1) {
        // ones on sides 0 and 2: path u1-u2-u0-u3
        out[0].side[0] = out[0].side[1] = out[0].chord02 = true;
        out[1].side[2] = out[1].side[3] = out[1].chord02 = true;
        out[2].chord13 = out[2].side[1] = out[2].chord02 = out[2].side[3] = true;
    } else {
        // ones on sides 1 and 3: path u2-u3-u1-u0
        out[0].side[1] = out[0].side[2] = out[0].chord13 = true;
        out[1].side[3] = out[1].side[0] = out[1].chord13 = true;
        out[2].chord02 = out[2].side[0] = out[2].chord13 = out[2].side[2] = true;
    }
    return out;
}

Graph k4_frame_graph() {
    Graph g(4);
    for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    return g;
}

EdgeSet realize(const K4Cycle& c, const std::array<EdgeSet, 4>& sides, const EdgeSet& chord02,
                const EdgeSet& chord13) {
    EdgeSet s;
    for (int i = 0; i < 4; ++i)
        if (c.side[i]) s ^= sides[i];
    if (c.chord02) s ^= chord02;
    if (c.chord13) s ^= chord13;
    return s;
}

// ---------------------------------------------------------------- orientations

bool dart_clockwise(const OnePlaneEmbedding& e, const BalancedOrientation& o, int dart) {
    EdgeId x = e.edge_of(dart);
    auto it = o.forward.find(x);
    if (it == o.forward.end()) throw PreconditionError("edge " + std::to_string(x) + " not oriented");
    bool along_uv = e.origin(dart) == e.graph().edge(x).u;
    return along_uv != it->second;
}

BalancedOrientation balanced_dual_orientation(const OnePlaneEmbedding& sk,
                                              const std::set<int>& crossing_faces) {
    require_plane(sk);
    for (int f : crossing_faces) {
        if (f < 0 || f >= sk.num_faces()) throw PreconditionError("face id out of range");
        auto& ds = sk.faces()[f];
        std::set<EdgeId> es;
        std::set<VertexId> vs;
        for (int h : ds) {
            es.insert(sk.edge_of(h));
            vs.insert(sk.origin(h));
        }
        if (ds.size() != 4 || es.size() != 4 || vs.size() != 4)
            throw PreconditionError("face " + std::to_string(f) + " is not a 4-cycle");
    }
    // dual multigraph: one edge per primal edge, plus matching edges on odd vertices
    int nf = sk.num_faces();
    struct DE {
        int a, b;
        EdgeId primal;  // -1 for the pairing edges
    };
    std::vector<DE> de;
    std::vector<std::vector<int>> inc(nf);
    for (auto& x : sk.graph().edges()) {
        int h = sk.dart_from(x.id, x.u);
        int fa = sk.face_of(h), fb = sk.face_of(h ^ 1);
        if (fa == fb) continue;  // bridge or loop: either direction will do
        inc[fa].push_back((int)de.size());
        inc[fb].push_back((int)de.size());
        de.push_back({fa, fb, x.id});
    }
    std::vector<int> odd;
    for (int f = 0; f < nf; ++f)
        if (inc[f].size() % 2) odd.push_back(f);
    for (size_t i = 0; i + 1 < odd.size(); i += 2) {
        inc[odd[i]].push_back((int)de.size());
        inc[odd[i + 1]].push_back((int)de.size());
        de.push_back({odd[i], odd[i + 1], -1});
    }
    BalancedOrientation o;
    for (auto& x : sk.graph().edges()) o.forward[x.id] = true;
    // Hierholzer, orienting each dual edge the way the circuit crosses it
    std::vector<char> used(de.size(), 0);
    std::vector<size_t> ptr(nf, 0);
    for (int s = 0; s < nf; ++s) {
        std::vector<std::pair<int, int>> stack{{s, -1}};
        while (!stack.empty()) {
            int f = stack.back().first;
            while (ptr[f] < inc[f].size() && used[inc[f][ptr[f]]]) ++ptr[f];
            if (ptr[f] == inc[f].size()) {
                stack.pop_back();
                continue;
            }
            int id = inc[f][ptr[f]];
            used[id] = 1;
            int to = de[id].a == f ? de[id].b : de[id].a;
            if (de[id].primal >= 0) {
                // dual edge f -> to: orient the primal edge along f's traversal
                const Edge& x = sk.graph().edge(de[id].primal);
                int h = sk.dart_from(x.id, x.u);
                o.forward[x.id] = sk.face_of(h) == f;
            }
            stack.push_back({to, id});
        }
    }
    return o;
}

std::optional<bool> walk_clockwise(const OnePlaneEmbedding& e, const BalancedOrientation& o,
                                   const SkirtWalk& w) {
    if (w.darts.empty()) return std::nullopt;
    bool first = dart_clockwise(e, o, w.darts[0]);
    for (int h : w.darts)
        if (dart_clockwise(e, o, h) != first) return std::nullopt;
    return first;
}

std::array<int, 4> labels_from_orientation(const OnePlaneEmbedding& e,
                                           const BalancedOrientation& o, VertexId x) {
    auto walks = skirt_walks(e, x);
    std::array<int, 4> lab{};
    int cw = 0;
    for (int i = 0; i < 4; ++i) {
        auto c = walk_clockwise(e, o, walks[i]);
        if (!c) throw PreconditionError("skirt walk not consistently oriented");
        lab[i] = *c ? 1 : 2;
        cw += *c;
    }
    if (cw != 2) throw PreconditionError("crossing " + std::to_string(x) + " is not balanced");
    return lab;
}

std::array<EdgeSet, 3> poppy_assignment_basis(const OnePlaneEmbedding& e, VertexId x,
                                              const std::array<int, 4>& labels) {
    if (!is_poppy(e, x)) throw PreconditionError("crossing " + std::to_string(x) + " is not a poppy");
    int w = e.graph().edge_bound();
    auto walks = skirt_walks(e, x);
    auto fr = crossing_frame(e, x);
    std::array<EdgeSet, 4> sides;
    for (int i = 0; i < 4; ++i) sides[i] = walks[i].edges(w);
    EdgeSet c02 = EdgeSet::of(w, {fr.chord02}), c13 = EdgeSet::of(w, {fr.chord13});
    auto pat = k4_assignment_basis(labels);
    std::array<EdgeSet, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = realize(pat[i], sides, c02, c13);
    return out;
}

std::variant<BalancedOrientation, Infeasible> balanced_skirt_orientation(
    const OnePlaneEmbedding& e) {
    require_valid(e);
    const auto& cr = e.crossings();
    for (auto& c : cr)
        if (!is_poppy(e, c.dummy)) throw PreconditionError("embedding is not poppy");
    const Graph& g = e.graph();
    // parity union-find over edges: bit(edge) = 1 when oriented v->u
    int w = g.edge_bound();
    std::vector<int> par(w), rel(w, 0);
    std::iota(par.begin(), par.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
        if (par[x] == x) return {x, 0};
        auto [r, p] = find(par[x]);
        par[x] = r;
        rel[x] ^= p;
        return {r, rel[x]};
    };
    bool ok = true;
    auto unite = [&](int a, int b, int parity) {  // bit(a) ^ bit(b) = parity
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) ok = false;
            return;
        }
        par[ra] = rb;
        rel[ra] = pa ^ pb ^ parity;
    };
    // a dart is clockwise iff bit(edge) ^ tflag(dart) = 1
    auto tflag = [&](int h) {
        return (e.origin(h) == g.edge(e.edge_of(h)).u) ? 0 : 1;  // 1 when dart runs v->u
    };
    std::vector<std::array<SkirtWalk, 4>> walks;
    for (auto& c : cr) walks.push_back(skirt_walks(e, c.dummy));
    for (auto& ws : walks)
        for (auto& wk : ws)
            for (size_t i = 1; i < wk.darts.size(); ++i)
                unite(e.edge_of(wk.darts[0]), e.edge_of(wk.darts[i]),
                      tflag(wk.darts[0]) ^ tflag(wk.darts[i]));
    if (!ok) return Infeasible{};
    // walk clockwise = bit(root) ^ k
    struct W {
        int root, k;
    };
    std::vector<std::array<W, 4>> wv(cr.size());
    std::map<int, int> shared;  // root -> number of crossings touching it
    for (size_t i = 0; i < cr.size(); ++i) {
        std::set<int> roots;
        for (int j = 0; j < 4; ++j) {
            int h = walks[i][j].darts[0];
            auto [r, p] = find(e.edge_of(h));
            wv[i][j] = {r, p ^ tflag(h)};
            roots.insert(r);
        }
        for (int r : roots) shared[r]++;
    }
    std::vector<int> order(cr.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> weight(cr.size(), 0);
    for (size_t i = 0; i < cr.size(); ++i) {
        std::set<int> roots;
        for (auto& x : wv[i]) roots.insert(x.root);
        for (int r : roots) weight[i] += shared[r] - 1;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight[a] > weight[b]; });
    std::map<int, int> val;  // root -> bit
    static const int pats[6][4] = {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
                                   {1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    std::function<bool(size_t)> solve = [&](size_t d) -> bool {
        if (d == order.size()) return true;
        int i = order[d];
        for (auto& p : pats) {
            std::vector<int> set_here;
            bool good = true;
            for (int j = 0; j < 4 && good; ++j) {
                int want = p[j] ^ wv[i][j].k;  // root bit making walk j clockwise iff p[j]
                auto it = val.find(wv[i][j].root);
                if (it == val.end()) {
                    val[wv[i][j].root] = want;
                    set_here.push_back(wv[i][j].root);
                } else if (it->second != want) {
                    good = false;
                }
            }
            if (good && solve(d + 1)) return true;
            for (int r : set_here) val.erase(r);
        }
        return false;
    };
    if (!solve(0)) return Infeasible{};
    BalancedOrientation o;
    for (auto& x : g.edges()) {
        if (e.crossed(x.id)) continue;
        auto [r, p] = find(x.id);
        auto it = val.find(r);
        int bit = (it == val.end() ? 0 : it->second) ^ p;
        o.forward[x.id] = bit == 0;
    }
    return o;
}

// ---------------------------------------------------------------- Thm 4 / Thm 5

namespace {

Basis assemble_3basis(const OnePlaneEmbedding& e,
                      const std::vector<std::array<int, 4>>& labels) {
    const Graph& g = e.graph();
    auto sk = skeleton_embedding(e);
    std::vector<EdgeSet> faces;
    for (auto& f : facial_cycles(sk))
        if (!f.empty()) faces.push_back(f);
    std::vector<char> removed(faces.size(), 0);
    for (auto& c : e.crossings()) {
        auto s = crossing_surrounding_cycle(e, c.dummy);
        if (std::holds_alternative<NotPoppy>(s))
            throw PreconditionError("crossing " + std::to_string(c.dummy) + " is not a poppy");
        const auto& cyc = std::get<EdgeSet>(s);
        bool hit = false;
        for (size_t i = 0; i < faces.size() && !hit; ++i)
            if (!removed[i] && faces[i] == cyc) removed[i] = hit = true;
        if (!hit) throw PreconditionError("surrounding cycle is not a skeleton face");
    }
    std::vector<EdgeSet> gen;
    for (size_t i = 0; i < faces.size(); ++i)
        if (!removed[i]) gen.push_back(faces[i]);
    for (size_t i = 0; i < e.crossings().size(); ++i)
        for (auto& s : poppy_assignment_basis(e, e.crossings()[i].dummy, labels[i]))
            gen.push_back(s);
    return extract_basis(g, gen);
}

std::vector<std::array<int, 4>> all_labels(const OnePlaneEmbedding& e,
                                           const BalancedOrientation& o) {
    std::vector<std::array<int, 4>> out;
    for (auto& c : e.crossings()) out.push_back(labels_from_orientation(e, o, c.dummy));
    return out;
}

}  // namespace

Basis fullcrossing_3basis(const OnePlaneEmbedding& e, const FullCrossingOptions& opt) {
    auto prof = classify(e);
    if (!prof.full_crossing) throw PreconditionError("embedding is not full-crossing");
    if (!two_connected(e.graph())) throw PreconditionError("graph is not 2-connected");
    auto sk = skeleton_embedding(e);
    // skeleton face around each crossing: the face of any skirt dart
    std::set<int> cf;
    for (auto& c : e.crossings()) {
        auto w = skirt_walks(e, c.dummy)[0];
        int h = w.darts[0];
        cf.insert(sk.face_of(sk.dart_from(e.edge_of(h), e.origin(h))));
    }
    auto o = balanced_dual_orientation(sk, cf);
    Basis b = assemble_3basis(e, all_labels(e, o));
    if (opt.low_charge_edge) {
        auto ch = charges(e.graph(), b);
        EdgeId x = *opt.low_charge_edge;
        if (x < (int)ch.size() && ch[x] > 1) {
            BalancedOrientation r = o;
            for (auto& [id, f] : r.forward) f = !f;
            Basis b2 = assemble_3basis(e, all_labels(e, r));
            auto ch2 = charges(e.graph(), b2);
            if (x < (int)ch2.size() && ch2[x] < ch[x]) b = std::move(b2);
        }
    }
    return b;
}

Basis poppy_3basis(const OnePlaneEmbedding& e, const BalancedOrientation& o) {
    require_valid(e);
    for (auto& c : e.crossings())
        if (!is_poppy(e, c.dummy)) throw PreconditionError("embedding is not poppy");
    return assemble_3basis(e, all_labels(e, o));
}

// ---------------------------------------------------------------- Prop 4

std::pair<Graph, Basis> desargues_3basis() {
    Graph g = generalized_petersen(10, 3);
    int w = g.edge_bound();
    Basis b;
    std::vector<EdgeId> inner;
    for (int i = 0; i < 10; ++i) inner.push_back(20 + i);
    b.push_back(EdgeSet::of(w, inner));
    for (int i = 0; i < 10; ++i) {
        // inner edge (10+i)-(10+i+3), spokes at i and i+3, outer path i..i+3
        std::vector<EdgeId> ids{20 + i, 10 + i, 10 + (i + 3) % 10};
        for (int j = 0; j < 3; ++j) ids.push_back((i + j) % 10);
        b.push_back(EdgeSet::of(w, ids));
    }
    return {std::move(g), std::move(b)};
}

}  // namespace kb
