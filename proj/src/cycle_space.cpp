#include "kbasis/cycle_space.hpp"

#include <algorithm>
#include <bit>

namespace kb {

EdgeSet EdgeSet::of(int width, const std::vector<EdgeId>& ids) {
    EdgeSet s(width);
    for (EdgeId e : ids) s.flip(e);
    return s;
}

void EdgeSet::set(EdgeId e) {
    grow((size_t(e) >> 6) + 1);
    w_[e >> 6] |= uint64_t(1) << (e & 63);
}

void EdgeSet::reset(EdgeId e) {
    if ((size_t(e) >> 6) < w_.size()) w_[e >> 6] &= ~(uint64_t(1) << (e & 63));
}

void EdgeSet::flip(EdgeId e) {
    grow((size_t(e) >> 6) + 1);
    w_[e >> 6] ^= uint64_t(1) << (e & 63);
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
    grow(o.w_.size());
    for (size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.word(int(i));
    return *this;
}

int EdgeSet::count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

bool EdgeSet::empty() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

int EdgeSet::lowest() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

std::vector<EdgeId> EdgeSet::ids() const {
    std::vector<EdgeId> r;
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t x = w_[i];
        while (x) {
            r.push_back(int(i * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return r;
}

bool operator==(const EdgeSet& a, const EdgeSet& b) {
    size_t n = std::max(a.w_.size(), b.w_.size());
    for (size_t i = 0; i < n; ++i)
        if (a.word(int(i)) != b.word(int(i))) return false;
    return true;
}

bool operator<(const EdgeSet& a, const EdgeSet& b) {
    size_t n = std::max(a.w_.size(), b.w_.size());
    for (size_t i = 0; i < n; ++i) {
        uint64_t x = a.word(int(i)), y = b.word(int(i));
        if (x == y) continue;
        uint64_t d = x ^ y;
        // the lowest differing bit decides; whoever holds it sorts first
        return (x >> std::countr_zero(d)) & 1u;
    }
    return false;
}

void check_edges(const Graph& g, const EdgeSet& s) {
    for (EdgeId e : s.ids())
        if (!g.has_edge(e)) throw ForeignEdge("edge id " + std::to_string(e) + " not in graph");
}

bool is_eulerian(const Graph& g, const EdgeSet& s) {
    check_edges(g, s);
    std::vector<char> par(g.vertex_bound(), 0);
    for (EdgeId e : s.ids()) {
        const Edge& ed = g.edge(e);
        if (ed.loop()) continue;
        par[ed.u] ^= 1;
        par[ed.v] ^= 1;
    }
    return std::none_of(par.begin(), par.end(), [](char c) { return c != 0; });
}

std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningForest& f) {
    if ((int)f.parent.size() < g.vertex_bound() ||
        (int)f.tree_edges.size() != g.n() - num_components(g))
        throw GraphError("forest does not match graph");
    for (EdgeId e : f.tree_edges)
        if (!g.has_edge(e)) throw GraphError("forest edge not in graph");
    std::vector<EdgeSet> out;
    int w = g.edge_bound();
    for (auto& e : g.edges()) {
        if (f.contains(e.id)) continue;
        EdgeSet c(w);
        c.flip(e.id);
        for (EdgeId x : f.path(e.u, e.v)) c.flip(x);
        out.push_back(std::move(c));
    }
    return out;
}

int rank(const std::vector<EdgeSet>& sets) {
    Span sp;
    for (auto& s : sets) sp.insert(s);
    return sp.rank();
}

// ---------------------------------------------------------------- Span

EdgeSet Span::reduce(EdgeSet s, EdgeSet* combo) const {
    // rows sorted by pivot ascending; eliminating in that order is enough
    // because each row's pivot is its lowest bit
    for (auto& r : rows_) {
        if (s.test(r.pivot)) {
            s ^= r.v;
            if (combo) *combo ^= r.combo;
        }
    }
    return s;
}

bool Span::insert(const EdgeSet& s) {
    EdgeSet combo;
    combo.flip(accepted_);
    EdgeSet r = reduce(s, &combo);
    if (r.empty()) return false;
    int p = r.lowest();
    // keep rows reduced against the new pivot so later reductions stay valid
    for (auto& row : rows_)
        if (row.v.test(p)) {
            row.v ^= r;
            row.combo ^= combo;
        }
    Row nr{std::move(r), p, std::move(combo)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const Row& a, int b) { return a.pivot < b; });
    rows_.insert(it, std::move(nr));
    ++accepted_;
    return true;
}

bool Span::contains(const EdgeSet& s) const { return reduce(s, nullptr).empty(); }

std::variant<std::vector<int>, NotInSpan> Span::express(const EdgeSet& s) const {
    EdgeSet combo;
    EdgeSet r = reduce(s, &combo);
    if (!r.empty()) return NotInSpan{};
    return combo.ids();
}

// ---------------------------------------------------------------- audits

std::vector<int> charges(const Graph& g, const std::vector<EdgeSet>& sets) {
    std::vector<int> ch(g.edge_bound(), 0);
    for (auto& s : sets)
        for (EdgeId e : s.ids()) {
            if (e >= (int)ch.size()) ch.resize(e + 1, 0);
            ++ch[e];
        }
    return ch;
}

int max_charge(const std::vector<int>& ch) {
    int m = 0;
    for (int c : ch) m = std::max(m, c);
    return m;
}

BasisReport verify_kbasis(const Graph& g, const std::vector<EdgeSet>& candidate, int k) {
    BasisReport r;
    r.elements = candidate;
    r.dimension = (int)candidate.size();
    r.betti = betti(g);
    r.k = k;
    r.all_eulerian = true;
    for (auto& s : candidate)
        if (!is_eulerian(g, s)) r.all_eulerian = false;  // also checks foreign ids
    r.rank = rank(candidate);
    r.independent = r.rank == r.dimension;
    r.generates = r.rank == r.betti;
    r.charge = charges(g, candidate);
    r.max_charge = max_charge(r.charge);
    r.verdict = r.all_eulerian && r.independent && r.generates && r.max_charge <= k;
    return r;
}

std::variant<std::vector<int>, NotInSpan> decompose(const EdgeSet& target,
                                                    const std::vector<EdgeSet>& basis) {
    Span sp;
    std::vector<int> accepted;
    for (int i = 0; i < (int)basis.size(); ++i)
        if (sp.insert(basis[i])) accepted.push_back(i);
    auto r = sp.express(target);
    if (std::holds_alternative<NotInSpan>(r)) return NotInSpan{};
    std::vector<int> out;
    for (int j : std::get<std::vector<int>>(r)) out.push_back(accepted[j]);
    return out;
}

std::vector<EdgeSet> extract_basis(const Graph& g, const std::vector<EdgeSet>& generating) {
    Span sp;
    std::vector<EdgeSet> out;
    for (auto& s : generating) {
        check_edges(g, s);
        if (sp.insert(s)) out.push_back(s);
    }
    if (sp.rank() != betti(g))
        throw NotGenerating("input spans dimension " + std::to_string(sp.rank()) + ", need " +
                            std::to_string(betti(g)));
    return out;
}

std::vector<EdgeSet> enumerate_cycle_space(const Graph& g, long long cap) {
    int b = betti(g);
    if (b >= 62 || (1LL << b) > cap)
        throw CapExceeded("cycle space has 2^" + std::to_string(b) + " elements");
    auto fc = fundamental_cycles(g, spanning_forest(g));
    std::vector<EdgeSet> out;
    out.reserve(size_t(1) << b);
    EdgeSet cur(g.edge_bound());
    out.push_back(cur);
    for (long long i = 1; i < (1LL << b); ++i) {
        cur ^= fc[std::countr_zero((unsigned long long)i)];
        out.push_back(cur);
    }
    return out;
}

}  // namespace kb
