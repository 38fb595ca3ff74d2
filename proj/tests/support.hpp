#pragma once
// Random generators for the property tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"

namespace kbtest {

using namespace kb;

// Grows a simple plane graph by splitting faces, keeping clockwise neighbour
// lists. Faces follow next(u->v) = (v -> successor of u at v).
class PlaneBuilder {
public:
    Graph g;
    std::map<VertexId, std::vector<VertexId>> rot;
    std::vector<Crossing> crossings;

    explicit PlaneBuilder(int cycle_len) : g(cycle_len) {
        for (int i = 0; i < cycle_len; ++i) {
            int j = (i + 1) % cycle_len;
            g.add_edge(std::min(i, j), std::max(i, j));
            rot[i] = {(i + cycle_len - 1) % cycle_len, j};
        }
    }

    VertexId succ(VertexId v, VertexId u) const {
        auto& r = rot.at(v);
        auto it = std::find(r.begin(), r.end(), u);
        return r[((it - r.begin()) + 1) % r.size()];
    }

    // faces as vertex sequences; entry i is the vertex entered by the i-th dart
    std::vector<std::vector<VertexId>> faces() const {
        std::set<std::pair<VertexId, VertexId>> seen;
        std::vector<std::vector<VertexId>> out;
        for (auto& [u, r] : rot)
            for (VertexId v : r) {
                if (seen.count({u, v})) continue;
                std::vector<VertexId> f;
                VertexId a = u, b = v;
                while (seen.insert({a, b}).second) {
                    f.push_back(b);
                    VertexId c = succ(b, a);
                    a = b;
                    b = c;
                }
                out.push_back(f);
            }
        return out;
    }

    // face f given as vertex sequence; positions i < j; returns false if the
    // new edge would duplicate one or the face visits a vertex twice
    bool add_chord(const std::vector<VertexId>& f, int i, int j) {
        VertexId a = f[i], c = f[j];
        if (!distinct(f) || a == c || adjacent(a, c)) return false;
        insert_at(a, prev(f, i), c);
        insert_at(c, prev(f, j), a);
        g.add_edge(std::min(a, c), std::max(a, c));
        return true;
    }

    // path of `len` new vertices from f[i] to f[j] through the face
    bool add_ear(const std::vector<VertexId>& f, int i, int j, int len) {
        VertexId a = f[i], c = f[j];
        if (!distinct(f) || a == c || len < 1) return false;
        std::vector<VertexId> path{a};
        for (int k = 0; k < len; ++k) path.push_back(g.add_vertex());
        path.push_back(c);
        insert_at(a, prev(f, i), path[1]);
        insert_at(c, prev(f, j), path[len]);
        for (int k = 1; k <= len; ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
        for (size_t k = 0; k + 1 < path.size(); ++k)
            g.add_edge(std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1]));
        return true;
    }

    // edges f[p0]-f[p2] and f[p1]-f[p3] crossing inside the face (p0<p1<p2<p3)
    bool add_crossing(const std::vector<VertexId>& f, std::array<int, 4> p) {
        if (!distinct(f)) return false;
        VertexId a = f[p[0]], b = f[p[1]], c = f[p[2]], d = f[p[3]];
        if (adjacent(a, c) || adjacent(b, d)) return false;
        VertexId x = dummy_base + (int)crossings.size();
        insert_at(a, prev(f, p[0]), x);
        insert_at(b, prev(f, p[1]), x);
        insert_at(c, prev(f, p[2]), x);
        insert_at(d, prev(f, p[3]), x);
        rot[x] = {a, d, c, b};
        EdgeId e1 = g.add_edge(std::min(a, c), std::max(a, c));
        EdgeId e2 = g.add_edge(std::min(b, d), std::max(b, d));
        crossings.push_back({x, e1, e2});
        return true;
    }

    OnePlaneEmbedding build() const {
        // dummies must sit above every vertex id
        std::map<VertexId, VertexId> ren;
        for (int i = 0; i < (int)crossings.size(); ++i) ren[crossings[i].dummy] = g.vertex_bound() + i;
        auto r = [&](VertexId v) { return ren.count(v) ? ren.at(v) : v; };
        std::map<VertexId, std::vector<VertexId>> rr;
        for (auto& [v, l] : rot)
            for (VertexId w : l) rr[r(v)].push_back(r(w));
        std::vector<Crossing> cr = crossings;
        for (auto& c : cr) c.dummy = r(c.dummy);
        return OnePlaneEmbedding::from_neighbors(g, cr, rr);
    }

    static constexpr VertexId dummy_base = 1'000'000;

private:
    static VertexId prev(const std::vector<VertexId>& f, int i) { return f[(i + f.size() - 1) % f.size()]; }
    static bool distinct(const std::vector<VertexId>& f) {
        std::set<VertexId> s(f.begin(), f.end());
        return s.size() == f.size();
    }
    bool adjacent(VertexId a, VertexId c) const {
        if (a >= dummy_base || c >= dummy_base) return false;
        for (EdgeId e : g.incident(a))
            if (g.edge(e).other(a) == c) return true;
        return false;
    }
    void insert_at(VertexId v, VertexId after, VertexId w) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, w);
    }
};

// faces that only touch real vertices
inline std::vector<std::vector<VertexId>> real_faces(const PlaneBuilder& b) {
    std::vector<std::vector<VertexId>> out;
    for (auto& f : b.faces()) {
        bool ok = true;
        for (VertexId v : f)
            if (v >= PlaneBuilder::dummy_base) ok = false;
        if (ok) out.push_back(f);
    }
    return out;
}

// Random 2-connected plane graph with about n vertices.
inline PlaneBuilder random_plane(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> len(3, 6);
    PlaneBuilder b(std::min(n, len(rng)));
    int guard = 0;
    while (b.g.n() < n && guard++ < 10 * n) {
        auto fs = b.faces();
        auto& f = fs[rng() % fs.size()];
        int i = rng() % f.size(), j = rng() % f.size();
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        if (rng() % 3 == 0)
            b.add_chord(f, i, j);
        else
            b.add_ear(f, i, j, 1 + rng() % std::max(1, std::min(3, n - b.g.n())));
    }
    for (int k = 0; k < n / 3; ++k) {
        auto fs = b.faces();
        auto& f = fs[rng() % fs.size()];
        int i = rng() % f.size(), j = rng() % f.size();
        if (i > j) std::swap(i, j);
        b.add_chord(f, i, j);
    }
    return b;
}

// Random plane graph plus crossings drawn inside distinct faces: the
// skeleton (the plane graph) stays connected.
inline OnePlaneEmbedding random_connected_skeleton(std::mt19937& rng, int n, int max_cross) {
    PlaneBuilder b = random_plane(rng, n);
    for (int k = 0; k < max_cross; ++k) {
        auto fs = real_faces(b);
        std::vector<std::vector<VertexId>> big;
        for (auto& f : fs)
            if (f.size() >= 4) big.push_back(f);
        if (big.empty()) break;
        auto& f = big[rng() % big.size()];
        std::vector<int> pos(f.size());
        for (size_t i = 0; i < pos.size(); ++i) pos[i] = (int)i;
        std::shuffle(pos.begin(), pos.end(), rng);
        std::array<int, 4> p{pos[0], pos[1], pos[2], pos[3]};
        std::sort(p.begin(), p.end());
        b.add_crossing(f, p);
    }
    return b.build();
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int u = rng() % v;
        g.add_edge(u, v);
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// as above without parallel edges
inline Graph random_simple_connected_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < n; ++v) {
        int u = rng() % v;
        g.add_edge(u, v);
        have.insert({u, v});
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have.count({u, v}) && coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace kbtest
