#include "kbasis/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace kb {

Graph::Graph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
}

void Graph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

VertexId Graph::add_vertex() {
    VertexId v = next_vertex_;
    add_vertex(v);
    return v;
}

void Graph::add_vertex(VertexId v) {
    if (v < 0) throw GraphError("negative vertex id");
    if (has_vertex(v)) throw GraphError("duplicate vertex " + std::to_string(v));
    if (v >= (int)vpresent_.size()) {
        vpresent_.resize(v + 1, 0);
        inc_.resize(v + 1);
    }
    vpresent_[v] = 1;
    auto it = std::lower_bound(vlist_.begin(), vlist_.end(), v);
    vlist_.insert(it, v);
    next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    EdgeId id = next_edge_;
    add_edge_with_id(id, u, v);
    return id;
}

void Graph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (id < 0) throw GraphError("negative edge id");
    if (has_edge(id)) throw GraphError("duplicate edge id " + std::to_string(id));
    if (id >= (int)epresent_.size()) {
        epresent_.resize(id + 1, 0);
        ebyid_.resize(id + 1);
    }
    Edge e{id, u, v};
    epresent_[id] = 1;
    ebyid_[id] = e;
    auto it = std::lower_bound(elist_.begin(), elist_.end(), id,
                               [](const Edge& a, EdgeId b) { return a.id < b; });
    elist_.insert(it, e);
    for (VertexId x : {u, v}) {
        auto& l = inc_[x];
        l.insert(std::upper_bound(l.begin(), l.end(), id), id);
    }
    next_edge_ = std::max(next_edge_, id + 1);
}

void Graph::remove_edge(EdgeId id) {
    if (!has_edge(id)) throw GraphError("unknown edge " + std::to_string(id));
    Edge e = ebyid_[id];
    epresent_[id] = 0;
    elist_.erase(std::lower_bound(elist_.begin(), elist_.end(), id,
                                  [](const Edge& a, EdgeId b) { return a.id < b; }));
    for (VertexId x : {e.u, e.v}) {
        auto& l = inc_[x];
        l.erase(std::lower_bound(l.begin(), l.end(), id));
    }
}

void Graph::remove_vertex(VertexId v) {
    check_vertex(v);
    if (!inc_[v].empty()) throw GraphError("vertex not isolated");
    vpresent_[v] = 0;
    vlist_.erase(std::lower_bound(vlist_.begin(), vlist_.end(), v));
}

const Edge& Graph::edge(EdgeId e) const {
    if (!has_edge(e)) throw GraphError("unknown edge " + std::to_string(e));
    return ebyid_[e];
}

std::vector<EdgeId> Graph::edge_ids() const {
    std::vector<EdgeId> r;
    r.reserve(elist_.size());
    for (auto& e : elist_) r.push_back(e.id);
    return r;
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
    check_vertex(v);
    return inc_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v : vlist_) d = std::max(d, (int)inc_[v].size());
    return d;
}

bool Graph::simple() const {
    std::vector<std::pair<int, int>> seen;
    for (auto& e : elist_) {
        if (e.loop()) return false;
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices() != b.vertices() || a.m() != b.m()) return false;
    for (size_t i = 0; i < a.edges().size(); ++i) {
        const Edge& x = a.edges()[i];
        const Edge& y = b.edges()[i];
        if (x.id != y.id) return false;
        if (std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) return false;
    }
    return true;
}

Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& keep) {
    Graph h;
    for (VertexId v : g.vertices()) h.add_vertex(v);
    for (EdgeId e : keep) {
        const Edge& ed = g.edge(e);
        h.add_edge_with_id(e, ed.u, ed.v);
    }
    h.reserve_ids(g.vertex_bound(), g.edge_bound());
    return h;
}

// ---------------------------------------------------------------- components

std::vector<int> component_labels(const Graph& g, int* count) {
    std::vector<int> lab(g.vertex_bound(), -1);
    int c = 0;
    for (VertexId s : g.vertices()) {
        if (lab[s] != -1) continue;
        lab[s] = c;
        std::vector<VertexId> st{s};
        while (!st.empty()) {
            VertexId x = st.back();
            st.pop_back();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.edge(e).other(x);
                if (lab[y] == -1) {
                    lab[y] = c;
                    st.push_back(y);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return lab;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    int c = 0;
    auto lab = component_labels(g, &c);
    std::vector<std::vector<VertexId>> r(c);
    for (VertexId v : g.vertices()) r[lab[v]].push_back(v);
    return r;
}

int num_components(const Graph& g) {
    int c = 0;
    component_labels(g, &c);
    return c;
}

bool connected(const Graph& g) { return num_components(g) <= 1; }

int betti(const Graph& g) { return g.m() - g.n() + num_components(g); }

// ---------------------------------------------------------------- blocks

std::vector<std::vector<EdgeId>> blocks(const Graph& g) {
    // iterative Hopcroft-Tarjan with an edge stack; parallel edges handled by
    // skipping only the tree edge itself, not every edge back to the parent
    int vb = g.vertex_bound();
    std::vector<int> disc(vb, -1), low(vb, 0);
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> estack;
    int timer = 0;
    struct Frame {
        VertexId v;
        EdgeId via;
        size_t next;
    };
    for (auto& e : g.edges())
        if (e.loop()) out.push_back({e.id});
    for (VertexId root : g.vertices()) {
        if (disc[root] != -1) continue;
        std::vector<Frame> st{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                const Edge& ed = g.edge(e);
                if (ed.loop() || e == f.via) continue;
                VertexId w = ed.other(f.v);
                if (disc[w] == -1) {
                    estack.push_back(e);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (st.empty()) break;
                VertexId p = st.back().v;
                low[p] = std::min(low[p], low[done.v]);
                if (low[done.v] >= disc[p]) {
                    std::vector<EdgeId> b;
                    while (true) {
                        EdgeId x = estack.back();
                        estack.pop_back();
                        b.push_back(x);
                        if (x == done.via) break;
                    }
                    std::sort(b.begin(), b.end());
                    out.push_back(std::move(b));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool two_connected(const Graph& g) {
    if (g.n() < 2 || !connected(g)) return false;
    auto b = blocks(g);
    if (g.n() == 2) return b.size() == 1 && g.m() >= 2 && !g.edge(b[0][0]).loop();
    return b.size() == 1 && b[0].size() >= 2;
}

// ---------------------------------------------------------------- forests

bool SpanningForest::contains(EdgeId e) const {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

std::vector<EdgeId> SpanningForest::path(VertexId a, VertexId b) const {
    std::vector<EdgeId> up, down;
    while (a != b) {
        if (depth[a] >= depth[b]) {
            if (parent[a] < 0) throw GraphError("vertices in different trees");
            up.push_back(parent_edge[a]);
            a = parent[a];
        } else {
            if (parent[b] < 0) throw GraphError("vertices in different trees");
            down.push_back(parent_edge[b]);
            b = parent[b];
        }
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

static SpanningForest bfs_forest(const Graph& g, const std::vector<char>* allowed) {
    SpanningForest f;
    int vb = g.vertex_bound();
    f.parent.assign(vb, -1);
    f.parent_edge.assign(vb, -1);
    f.depth.assign(vb, -1);
    for (VertexId r : g.vertices()) {
        if (f.depth[r] != -1) continue;
        f.depth[r] = 0;
        std::deque<VertexId> q{r};
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(x)) {
                if (allowed && !(*allowed)[e]) continue;
                VertexId y = g.edge(e).other(x);
                if (f.depth[y] != -1) continue;
                f.depth[y] = f.depth[x] + 1;
                f.parent[y] = x;
                f.parent_edge[y] = e;
                f.tree_edges.push_back(e);
                q.push_back(y);
            }
        }
    }
    std::sort(f.tree_edges.begin(), f.tree_edges.end());
    return f;
}

SpanningForest spanning_forest(const Graph& g, RootPolicy) { return bfs_forest(g, nullptr); }

SpanningForest forest_from_edges(const Graph& g, const std::vector<EdgeId>& edges) {
    std::vector<char> allowed(g.edge_bound(), 0);
    for (EdgeId e : edges) {
        if (!g.has_edge(e)) throw GraphError("forest edge not in graph");
        allowed[e] = 1;
    }
    SpanningForest f = bfs_forest(g, &allowed);
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (f.tree_edges != sorted || (int)sorted.size() != g.n() - num_components(g))
        throw GraphError("edge set is not a spanning forest");
    return f;
}

// ---------------------------------------------------------------- packing

namespace {
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};
}  // namespace

bool is_spanning_tree(const Graph& g, const std::vector<EdgeId>& edges) {
    if ((int)edges.size() != g.n() - 1) return false;
    Dsu d(g.vertex_bound());
    for (EdgeId e : edges) {
        if (!g.has_edge(e)) return false;
        if (!d.unite(g.edge(e).u, g.edge(e).v)) return false;
    }
    return true;
}

std::variant<TreePacking, Infeasible> tree_packing(const Graph& g, int k) {
    if (k <= 0) throw GraphError("k must be positive");
    if (!connected(g)) throw GraphError("tree packing needs a connected graph");
    if ((long)k * (g.n() - 1) > g.m()) return Infeasible{};
    int eb = g.edge_bound();
    // owner[e] = forest index or -1
    std::vector<int> owner(eb, -1);

    // path in forest i between a and b (edge ids), empty optional if none
    auto forest_path = [&](int i, VertexId a, VertexId b) -> std::optional<std::vector<EdgeId>> {
        if (a == b) return std::vector<EdgeId>{};
        std::vector<EdgeId> via(g.vertex_bound(), -1);
        std::vector<char> seen(g.vertex_bound(), 0);
        std::deque<VertexId> q{a};
        seen[a] = 1;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            if (x == b) break;
            for (EdgeId e : g.incident(x)) {
                if (owner[e] != i) continue;
                VertexId y = g.edge(e).other(x);
                if (seen[y]) continue;
                seen[y] = 1;
                via[y] = e;
                q.push_back(y);
            }
        }
        if (!seen[b]) return std::nullopt;
        std::vector<EdgeId> p;
        for (VertexId x = b; x != a;) {
            EdgeId e = via[x];
            p.push_back(e);
            x = g.edge(e).other(x);
        }
        return p;
    };

    int placed = 0;
    for (auto& start : g.edges()) {
        if (start.loop()) continue;
        // BFS over edges for a shortest augmenting sequence
        std::vector<EdgeId> pred(eb, -2);
        std::vector<int> predf(eb, -1);
        pred[start.id] = -1;
        std::deque<EdgeId> q{start.id};
        EdgeId last = -1;
        int lastf = -1;
        while (!q.empty() && last < 0) {
            EdgeId x = q.front();
            q.pop_front();
            for (int i = 0; i < k && last < 0; ++i) {
                if (owner[x] == i) continue;
                auto p = forest_path(i, g.edge(x).u, g.edge(x).v);
                if (!p) {
                    last = x;
                    lastf = i;
                    break;
                }
                for (EdgeId y : *p) {
                    if (pred[y] != -2) continue;
                    pred[y] = x;
                    predf[y] = i;
                    q.push_back(y);
                }
            }
        }
        if (last < 0) continue;
        // x enters forest lastf; each predecessor takes the vacated slot
        EdgeId x = last;
        int f = lastf;
        while (x != -1) {
            int old = owner[x];
            owner[x] = f;
            f = old;
            EdgeId p = pred[x];
            if (p != -1) f = predf[x];
            // predf[x] is the forest x was in when p displaced it
            x = p;
        }
        ++placed;
        if (placed == k * (g.n() - 1)) break;
    }
    if (placed < k * (g.n() - 1)) return Infeasible{};
    TreePacking out(k);
    for (auto& e : g.edges())
        if (owner[e.id] >= 0) out[owner[e.id]].push_back(e.id);
    return out;
}

// ---------------------------------------------------------------- splitting etc.

SplitResult vertex_split(const Graph& g, VertexId v, const std::vector<EdgeId>& stay,
                         const std::vector<EdgeId>& to_new) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex");
    if (stay.empty() || to_new.empty()) throw GraphError("partition parts must be nonempty");
    // incident list counts loops twice; a partition names each loop end once
    std::vector<EdgeId> all = stay;
    all.insert(all.end(), to_new.begin(), to_new.end());
    std::sort(all.begin(), all.end());
    if (all != g.incident(v)) throw GraphError("partition must cover the edges at v exactly");
    Graph h;
    for (VertexId x : g.vertices()) h.add_vertex(x);
    h.reserve_ids(g.vertex_bound(), g.edge_bound());
    VertexId w = h.add_vertex();
    std::vector<int> moved(g.edge_bound(), 0);
    for (EdgeId e : to_new) ++moved[e];
    for (auto& e : g.edges()) {
        VertexId a = e.u, b = e.v;
        if (e.loop() && e.u == v) {
            // each listed end decides independently
            int m = moved[e.id];
            a = m >= 1 ? w : v;
            b = m >= 2 ? w : v;
        } else if (moved[e.id]) {
            if (a == v) a = w;
            if (b == v) b = w;
        }
        h.add_edge_with_id(e.id, a, b);
    }
    EdgeId ne = h.add_edge(v, w);
    return {std::move(h), w, ne};
}

ContractResult contract(const Graph& g, EdgeId e) {
    const Edge ed = g.edge(e);
    if (ed.loop()) throw GraphError("cannot contract a loop");
    Graph h;
    for (VertexId x : g.vertices())
        if (x != ed.u && x != ed.v) h.add_vertex(x);
    VertexId z = g.vertex_bound();
    h.add_vertex(z);
    auto map = [&](VertexId x) { return (x == ed.u || x == ed.v) ? z : x; };
    for (auto& f : g.edges()) {
        if (f.id == e) continue;
        h.add_edge_with_id(f.id, map(f.u), map(f.v));
    }
    h.reserve_ids(z + 1, g.edge_bound());
    return {std::move(h), z};
}

SubdivideResult subdivide(const Graph& g, EdgeId e) {
    const Edge ed = g.edge(e);
    Graph h = g;
    h.remove_edge(e);
    VertexId mid = h.add_vertex();
    EdgeId a = h.add_edge(ed.u, mid);
    EdgeId b = h.add_edge(mid, ed.v);
    return {std::move(h), mid, a, b};
}

UnsubdivideResult unsubdivide(const Graph& g, VertexId x) {
    const auto& inc = g.incident(x);
    if (inc.size() != 2 || inc[0] == inc[1]) throw GraphError("vertex is not a subdivision vertex");
    const Edge a = g.edge(inc[0]), b = g.edge(inc[1]);
    Graph h = g;
    h.remove_edge(a.id);
    h.remove_edge(b.id);
    h.remove_vertex(x);
    EdgeId ne = std::min(a.id, b.id);
    h.add_edge_with_id(ne, a.other(x), b.other(x));
    return {std::move(h), ne};
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    std::map<std::pair<int, int>, int> mult;
    for (auto& e : g.edges()) {
        if (e.loop()) return 1;
        if (++mult[std::minmax(e.u, e.v)] >= 2) best = 2;
    }
    if (best) return best;
    // BFS from every vertex; a non-tree edge closes a cycle of length
    // d[x]+d[y]+1 which bounds the girth, and the minimum over roots is exact
    int vb = g.vertex_bound();
    std::vector<int> d(vb);
    std::vector<EdgeId> via(vb);
    for (VertexId r : g.vertices()) {
        std::fill(d.begin(), d.end(), -1);
        d[r] = 0;
        via[r] = -1;
        std::deque<VertexId> q{r};
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            if (best && 2 * d[x] + 1 >= *best) break;
            for (EdgeId e : g.incident(x)) {
                if (e == via[x]) continue;
                VertexId y = g.edge(e).other(x);
                if (d[y] == -1) {
                    d[y] = d[x] + 1;
                    via[y] = e;
                    q.push_back(y);
                } else {
                    int len = d[x] + d[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------- canonical form

namespace {

struct Canon {
    int n;
    std::vector<std::vector<int>> adj;  // multiplicity matrix, loops on diagonal
    std::string best;
    bool have = false;

    std::vector<int> refine(std::vector<int> col) const {
        while (true) {
            int before = *std::max_element(col.begin(), col.end()) + 1;
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> nb;
                for (int u = 0; u < n; ++u)
                    if (adj[v][u]) nb.emplace_back(col[u], adj[v][u]);
                std::sort(nb.begin(), nb.end());
                sig[v].push_back(col[v]);
                for (auto& [c, m] : nb) {
                    sig[v].push_back(c);
                    sig[v].push_back(m);
                }
            }
            auto uniq = sig;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int v = 0; v < n; ++v)
                col[v] = int(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            if ((int)uniq.size() == before) return col;
        }
    }

    void search(const std::vector<int>& col) {
        int k = *std::max_element(col.begin(), col.end()) + 1;
        if (k == n) {
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[col[v]] = v;
            std::string s;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    s += std::to_string(adj[order[i]][order[j]]);
                    s += ',';
                }
            if (!have || s < best) {
                best = s;
                have = true;
            }
            return;
        }
        std::vector<int> size(k, 0);
        for (int c : col) ++size[c];
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        for (int v = 0; v < n; ++v) {
            if (col[v] != target) continue;
            std::vector<int> c2(n);
            for (int u = 0; u < n; ++u) c2[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
            // re-rank
            auto vals = c2;
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (auto& x : c2) x = int(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
            search(refine(c2));
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    Canon c;
    c.n = g.n();
    std::string head = std::to_string(g.n()) + ":" + std::to_string(g.m()) + ":";
    if (c.n == 0) return head;
    std::vector<int> idx(g.vertex_bound(), -1);
    for (int i = 0; i < c.n; ++i) idx[g.vertices()[i]] = i;
    c.adj.assign(c.n, std::vector<int>(c.n, 0));
    for (auto& e : g.edges()) {
        int a = idx[e.u], b = idx[e.v];
        c.adj[a][b]++;
        if (a != b) c.adj[b][a]++;
    }
    c.search(c.refine(std::vector<int>(c.n, 0)));
    return head + c.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------- generators

Graph lcf_graph(int n, const std::vector<int>& jumps) {
    Graph g(n);
    std::vector<std::pair<int, int>> seen;
    auto add = [&](int a, int b) {
        std::pair<int, int> k{std::min(a, b), std::max(a, b)};
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) return;
        seen.push_back(k);
        g.add_edge(k.first, k.second);
    };
    for (int i = 0; i < n; ++i) {
        add(i, (i + 1) % n);
        int j = jumps[i % jumps.size()];
        add(i, ((i + j) % n + n) % n);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) throw GraphError("generalized_petersen needs 1 <= k < n/2");
    Graph g(2 * n);
    auto add = [&](int a, int b) { g.add_edge(std::min(a, b), std::max(a, b)); };
    for (int i = 0; i < n; ++i) add(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) add(i, n + i);
    for (int i = 0; i < n; ++i) add(n + i, n + (i + k) % n);
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v : g.vertices()) os << "  " << v << ";\n";
    for (auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace kb
