#include "kbasis/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

namespace kb {

int counting_lower_bound(const Graph& g) {
    auto gi = girth(g);
    if (!gi) throw GraphError("counting_lower_bound needs a graph with a cycle");
    long long num = (long long)*gi * betti(g);
    return (int)((num + g.m() - 1) / g.m());
}

int cubic_girth_bound(int n, int k) {
    if (n < 4 || n % 2) throw std::invalid_argument("cubic graphs need even n >= 4");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    return (3 * k / 2) * n / (n / 2 + 1);
}

std::vector<EdgeSet> sorted_cycle_space(const Graph& g, long long cap) {
    auto all = enumerate_cycle_space(g, cap);
    std::vector<std::pair<int, EdgeSet>> keyed;
    keyed.reserve(all.size());
    for (auto& s : all)
        if (!s.empty()) keyed.emplace_back(s.count(), std::move(s));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<EdgeSet> out;
    out.reserve(keyed.size());
    for (auto& [c, s] : keyed) out.push_back(std::move(s));
    return out;
}

// ---------------------------------------------------------------- B&B

namespace {

using Clock = std::chrono::steady_clock;

// dense re-indexing of edge ids so rows are short
struct Dense {
    int m = 0, words = 0;
    std::vector<int> index;  // edge id -> dense
    std::vector<EdgeId> id;  // dense -> edge id
    explicit Dense(const Graph& g) {
        index.assign(g.edge_bound(), -1);
        for (auto& e : g.edges()) {
            index[e.id] = m++;
            id.push_back(e.id);
        }
        words = std::max(1, (m + 63) / 64);
    }
    std::vector<uint64_t> pack(const EdgeSet& s) const {
        std::vector<uint64_t> r(words, 0);
        for (EdgeId e : s.ids()) {
            int d = index.at(e);
            r[d >> 6] |= uint64_t(1) << (d & 63);
        }
        return r;
    }
};

struct Searcher {
    const Dense& dn;
    int beta, W;
    std::vector<std::vector<uint64_t>> L;  // packed candidates
    std::vector<std::vector<int>> edges_of;
    std::vector<int> minsz, suffix_rank;
    std::vector<int> cap;  // dense
    const SearchBudget& budget;
    Clock::time_point deadline;
    std::atomic<long long>& nodes;
    std::atomic<bool> budget_hit{false};

    Searcher(const Dense& d, int b, const SearchBudget& bud, std::atomic<long long>& nd)
        : dn(d), beta(b), W(d.words), budget(bud), nodes(nd) {}

    struct State {
        std::vector<std::vector<uint64_t>> rows;
        std::vector<int> pivots;
        std::vector<int> charge;
        std::vector<int> chosen;
        long long remcap = 0;
    };

    bool reduce_independent(std::vector<uint64_t>& x, const State& s) const {
        for (size_t r = 0; r < s.rows.size(); ++r) {
            int p = s.pivots[r];
            if ((x[p >> 6] >> (p & 63)) & 1)
                for (int w = 0; w < W; ++w) x[w] ^= s.rows[r][w];
        }
        for (int w = 0; w < W; ++w)
            if (x[w]) return true;
        return false;
    }
    static int lowest(const std::vector<uint64_t>& x) {
        for (size_t w = 0; w < x.size(); ++w)
            if (x[w]) return int(w * 64 + std::countr_zero(x[w]));
        return -1;
    }

    bool tick() {
        long long n = ++nodes;
        if (n > budget.max_nodes) {
            budget_hit = true;
            return false;
        }
        if ((n & 4095) == 0 && Clock::now() > deadline) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // explores selections whose next element index is >= start
    bool dfs(int start, State& s, std::atomic<int>* best_first) {
        int depth = (int)s.chosen.size();
        if (depth == beta) return true;
        int need = beta - depth;
        for (int i = start; i < (int)L.size(); ++i) {
            if (budget_hit) return false;
            if (depth == 0 && best_first && best_first->load() < i) return false;
            if ((int)L.size() - i < need) return false;
            if (depth + suffix_rank[i] < beta) return false;
            if ((long long)need * minsz[i] > s.remcap) return false;
            if (!tick()) return false;
            bool fits = true;
            for (int d : edges_of[i])
                if (s.charge[d] >= cap[d]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            auto x = L[i];
            if (!reduce_independent(x, s)) continue;
            s.rows.push_back(x);
            s.pivots.push_back(lowest(x));
            for (int d : edges_of[i]) ++s.charge[d];
            s.remcap -= (long long)edges_of[i].size();
            s.chosen.push_back(i);
            if (dfs(i + 1, s, nullptr)) return true;
            s.chosen.pop_back();
            s.remcap += (long long)edges_of[i].size();
            for (int d : edges_of[i]) --s.charge[d];
            s.rows.pop_back();
            s.pivots.pop_back();
        }
        return false;
    }

    State fresh() const {
        State s;
        s.charge.assign(dn.m, 0);
        for (int c : cap) s.remcap += c;
        return s;
    }
};

}  // namespace

CapacitatedResult search_basis(const Graph& g, const std::vector<EdgeSet>& candidates,
                               const std::vector<int>& capacity, const SearchBudget& budget) {
    CapacitatedResult res;
    int beta = betti(g);
    if (beta == 0) {
        res.outcome = SearchOutcome::Found;
        return res;
    }
    Dense dn(g);
    std::atomic<long long> nodes{0};
    Searcher S(dn, beta, budget, nodes);
    S.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.max_seconds));
    S.cap.assign(dn.m, 0);
    for (auto& e : g.edges())
        S.cap[dn.index[e.id]] = e.id < (int)capacity.size() ? capacity[e.id] : 0;
    std::vector<int> origin;  // index into candidates
    for (int i = 0; i < (int)candidates.size(); ++i) {
        check_edges(g, candidates[i]);
        if (candidates[i].empty()) continue;
        auto p = dn.pack(candidates[i]);
        std::vector<int> es;
        bool ok = true;
        for (EdgeId e : candidates[i].ids()) {
            int d = dn.index[e];
            if (S.cap[d] <= 0) ok = false;
            es.push_back(d);
        }
        if (!ok) continue;
        S.L.push_back(std::move(p));
        S.edges_of.push_back(std::move(es));
        origin.push_back(i);
    }
    int L = (int)S.L.size();
    S.minsz.assign(L + 1, 1 << 30);
    S.suffix_rank.assign(L + 1, 0);
    {
        Searcher::State sp = S.fresh();
        for (int i = L - 1; i >= 0; --i) {
            S.minsz[i] = std::min(S.minsz[i + 1], (int)S.edges_of[i].size());
            auto x = S.L[i];
            if (S.reduce_independent(x, sp)) {
                sp.rows.push_back(x);
                sp.pivots.push_back(Searcher::lowest(x));
            }
            S.suffix_rank[i] = (int)sp.rows.size();
        }
    }
    auto finish = [&](const std::vector<int>& chosen) {
        res.outcome = SearchOutcome::Found;
        for (int i : chosen) res.witness.push_back(candidates[origin[i]]);
    };
    int T = std::max(1, budget.threads);
    if (T == 1 || L < 2) {
        auto s = S.fresh();
        if (S.dfs(0, s, nullptr)) finish(s.chosen);
        else res.outcome = S.budget_hit ? SearchOutcome::Budget : SearchOutcome::None;
        res.nodes = nodes;
        return res;
    }
    // first element i handled by thread i % T; the smallest successful i wins,
    // which is the witness a sequential run would return
    std::atomic<int> best_first{L};
    std::vector<std::vector<int>> found(L);
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < L; i += T) {
                if (best_first.load() < i || S.budget_hit) return;
                auto s = S.fresh();
                // force i as the first element, then search the rest
                bool fits = true;
                for (int d : S.edges_of[i])
                    if (S.cap[d] < 1) fits = false;
                if (!fits) continue;
                if (!S.tick()) return;
                s.rows.push_back(S.L[i]);
                s.pivots.push_back(Searcher::lowest(S.L[i]));
                for (int d : S.edges_of[i]) ++s.charge[d];
                s.remcap -= (long long)S.edges_of[i].size();
                s.chosen.push_back(i);
                if (S.dfs(i + 1, s, nullptr)) {
                    std::lock_guard<std::mutex> lk(mu);
                    found[i] = s.chosen;
                    int cur = best_first.load();
                    while (i < cur && !best_first.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    res.nodes = nodes;
    // after a budget stop a smaller first element may be unexplored, so the
    // winner would depend on scheduling
    if (S.budget_hit) res.outcome = SearchOutcome::Budget;
    else if (best_first.load() < L) finish(found[best_first.load()]);
    else res.outcome = SearchOutcome::None;
    return res;
}

std::variant<BasisNumberCertificate, BudgetExceeded> exact_basis_number(const Graph& g,
                                                                        const SearchBudget& budget) {
    BasisNumberCertificate cert;
    int beta = betti(g);
    if (beta == 0) {
        cert.value = 0;
        cert.lower_bound_reason = "counting";
        cert.exhaustive = true;
        return cert;
    }
    std::vector<EdgeSet> elems;
    try {
        elems = sorted_cycle_space(g, budget.max_elements);
    } catch (const CapExceeded& ex) {
        BudgetExceeded b;
        b.lower_bound = counting_lower_bound(g);
        b.reason = ex.what();
        return b;
    }
    auto start = Clock::now();
    auto remaining = [&] {
        return budget.max_seconds - std::chrono::duration<double>(Clock::now() - start).count();
    };
    int cb = counting_lower_bound(g);
    cert.counting_bound = cb;
    long long nodes = 0;
    std::optional<SearchOutcome> below;  // outcome for k-1
    for (int k = cb;; ++k) {
        SearchBudget b = budget;
        b.max_seconds = remaining();
        b.max_nodes = budget.max_nodes - nodes;
        if (b.max_seconds <= 0 || b.max_nodes <= 0) {
            BudgetExceeded be;
            be.lower_bound = k;
            be.reason = "budget exhausted";
            be.nodes = nodes;
            return be;
        }
        auto r = search_basis(g, elems, std::vector<int>(g.edge_bound(), k), b);
        nodes += r.nodes;
        if (r.outcome == SearchOutcome::Budget) {
            BudgetExceeded be;
            be.lower_bound = k;
            be.reason = "budget exhausted at k=" + std::to_string(k);
            be.nodes = nodes;
            return be;
        }
        if (r.outcome == SearchOutcome::None) {
            below = SearchOutcome::None;
            continue;
        }
        cert.value = k;
        cert.witness = r.witness;
        if (k == cb) {
            cert.lower_bound_reason = "counting";
            // run k-1 anyway so the certificate is exhaustive
            SearchBudget b2 = budget;
            b2.max_seconds = remaining();
            b2.max_nodes = budget.max_nodes - nodes;
            if (k - 1 <= 0) {
                cert.exhaustive = true;
            } else if (b2.max_seconds > 0 && b2.max_nodes > 0) {
                auto r2 = search_basis(g, elems, std::vector<int>(g.edge_bound(), k - 1), b2);
                nodes += r2.nodes;
                cert.exhaustive = r2.outcome == SearchOutcome::None;
            }
        } else {
            cert.lower_bound_reason = "exhaustion";
            cert.exhaustive = below == SearchOutcome::None;
        }
        cert.nodes = nodes;
        return cert;
    }
}

// ---------------------------------------------------------------- naive oracle

namespace {

struct Naive {
    int beta, k;
    std::vector<uint64_t> el;
    // per-depth state: reduced rows and bit-sliced charge counters
    std::vector<uint64_t> rows, c0, c1, c2;
    uint64_t k0, k1, k2;
    bool found = false;

    bool exceeds(uint64_t a0, uint64_t a1, uint64_t a2) const {
        // edges whose 3-bit count is greater than k
        uint64_t eq2 = ~(a2 ^ k2), eq1 = ~(a1 ^ k1);
        uint64_t gt = (a2 & ~k2) | (eq2 & ((a1 & ~k1) | (eq1 & (a0 & ~k0))));
        return gt != 0;
    }

    // visits every subset of size beta; bookkeeping is incremental but no
    // subset is skipped
    void rec(int start, int depth, bool indep) {
        if (depth == beta) {
            if (indep && !exceeds(c0[depth], c1[depth], c2[depth])) found = true;
            return;
        }
        for (int i = start; i + (beta - depth) <= (int)el.size() && !found; ++i) {
            uint64_t x = el[i];
            for (int r = 0; r < depth; ++r)
                if (rows[r] && (x & (rows[r] & -rows[r]))) x ^= rows[r];
            rows[depth] = x;
            uint64_t a0 = c0[depth], a1 = c1[depth], a2 = c2[depth], y = el[i];
            uint64_t carry0 = a0 & y;
            a0 ^= y;
            uint64_t carry1 = a1 & carry0;
            a1 ^= carry0;
            a2 ^= carry1;
            c0[depth + 1] = a0;
            c1[depth + 1] = a1;
            c2[depth + 1] = a2;
            rec(i + 1, depth + 1, indep && x != 0);
        }
    }
};

}  // namespace

bool naive_has_kbasis(const Graph& g, int k) {
    int beta = betti(g);
    if (beta == 0) return true;
    if (g.m() > 64) throw CapExceeded("naive oracle handles at most 64 edges");
    if (beta > 7) throw CapExceeded("naive oracle handles betti <= 7");
    Dense dn(g);
    Naive nv;
    nv.beta = beta;
    nv.k = k;
    for (auto& s : enumerate_cycle_space(g, 1 << 8))
        if (!s.empty()) nv.el.push_back(dn.pack(s)[0]);
    nv.rows.assign(beta + 1, 0);
    nv.c0.assign(beta + 1, 0);
    nv.c1.assign(beta + 1, 0);
    nv.c2.assign(beta + 1, 0);
    int kk = std::min(k, 7);
    nv.k0 = (kk & 1) ? ~0ULL : 0;
    nv.k1 = (kk & 2) ? ~0ULL : 0;
    nv.k2 = (kk & 4) ? ~0ULL : 0;
    nv.rec(0, 0, true);
    return nv.found;
}

int naive_basis_number(const Graph& g) {
    int beta = betti(g);
    if (beta == 0) return 0;
    for (int k = 1;; ++k)
        if (naive_has_kbasis(g, k)) return k;
}

// ---------------------------------------------------------------- chains

ChainResult lower_bound_by_contraction_chain(const Graph& g, const std::vector<ChainStep>& chain,
                                             int base_bound) {
    // replayed in place with the same id rules as contract() / unsubdivide();
    // copying per step is quadratic on long subdivision chains
    Graph cur = g;
    for (auto& st : chain) {
        if (st.kind == ChainStep::Contract) {
            if (!cur.has_edge(st.id)) throw GraphError("chain: no edge " + std::to_string(st.id));
            const Edge ed = cur.edge(st.id);
            if (ed.loop()) throw GraphError("chain: cannot contract a loop");
            VertexId z = cur.add_vertex();
            cur.remove_edge(st.id);
            std::vector<Edge> moved;
            for (VertexId x : {ed.u, ed.v})
                for (EdgeId f : cur.incident(x)) moved.push_back(cur.edge(f));
            std::sort(moved.begin(), moved.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
            moved.erase(std::unique(moved.begin(), moved.end(), [](const Edge& a, const Edge& b) { return a.id == b.id; }),
                        moved.end());
            auto map = [&](VertexId x) { return (x == ed.u || x == ed.v) ? z : x; };
            for (auto& f : moved) cur.remove_edge(f.id);
            cur.remove_vertex(ed.u);
            cur.remove_vertex(ed.v);
            for (auto& f : moved) cur.add_edge_with_id(f.id, map(f.u), map(f.v));
        } else {
            VertexId x = st.id;
            if (!cur.has_vertex(x)) throw GraphError("chain: no vertex " + std::to_string(x));
            const auto inc = cur.incident(x);
            if (inc.size() != 2 || inc[0] == inc[1]) throw GraphError("chain: vertex is not a subdivision vertex");
            const Edge a = cur.edge(inc[0]), b = cur.edge(inc[1]);
            cur.remove_edge(a.id);
            cur.remove_edge(b.id);
            cur.remove_vertex(x);
            cur.add_edge_with_id(std::min(a.id, b.id), a.other(x), b.other(x));
        }
    }
    return {cur, base_bound};
}

std::optional<int> cubic_girth_certificate(const Graph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) != 3) return std::nullopt;
    auto gi = girth(g);
    if (!gi || g.n() < 4 || g.n() % 2) return std::nullopt;
    std::optional<int> best;
    for (int k = 1; k <= g.m(); ++k) {
        if (*gi > cubic_girth_bound(g.n(), k)) best = k + 1;
        else break;
    }
    return best;
}

}  // namespace kb
