#include "kbasis/catalog.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "kbasis/constructions.hpp"

namespace kb {

namespace detail {
// generated from data/fixtures at configure time
const std::map<std::string, std::string>& fixture_sources();
}  // namespace detail

namespace {

Graph hypercube(int d) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) es.push_back({v, v | 1 << b});
    std::sort(es.begin(), es.end());
    Graph g(1 << d);
    for (auto [a, b] : es) g.add_edge(a, b);
    return g;
}

// cube edges sorted, then per face (bit b fixed to s) its two diagonals
Graph cube_with_diagonals() {
    Graph g = hypercube(3);
    for (int b = 0; b < 3; ++b)
        for (int s = 0; s < 2; ++s) {
            std::vector<int> f;
            for (int v = 0; v < 8; ++v)
                if ((v >> b & 1) == s) f.push_back(v);
            int a = f[0], opp = -1;
            for (int v : f)
                if (__builtin_popcount(v ^ a) == 2) opp = v;
            std::vector<int> rest;
            for (int v : f)
                if (v != a && v != opp) rest.push_back(v);
            g.add_edge(a, opp);
            g.add_edge(rest[0], rest[1]);
        }
    return g;
}

Graph k34_labelled() {
    Graph g(7);
    for (int a : {2, 4, 6})
        for (int b : {1, 3, 5, 7}) g.add_edge(a - 1, b - 1);
    return g;
}

struct Registered {
    CatalogEntry entry;
    std::function<Graph()> build;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> r = [] {
        std::vector<Registered> v;
        auto add = [&](CatalogEntry e, std::function<Graph()> b) { v.push_back({std::move(e), std::move(b)}); };
        ExpectedFlags none{false, false, false, std::nullopt, std::nullopt, std::nullopt, std::nullopt};

        add({"K4", "complete graph", 2, "counting bound and facial basis", true, {}},
            [] { return complete_graph(4); });
        add({"K5", "complete graph", 3, "Table 1 discussion; exact search", true, {}},
            [] { return complete_graph(5); });
        add({"K_{3,3}", "complete bipartite", 3, "exact search", true, {}},
            [] { return complete_bipartite(3, 3); });
        add({"Prism", "generalized Petersen GP(3,1)", 2, "planar, counting bound", true, {}},
            [] { return generalized_petersen(3, 1); });
        add({"MoebiusKantor", "generalized Petersen GP(8,3)", 0, "no value recorded", false, {}},
            [] { return generalized_petersen(8, 3); });
        add({"K6", "complete graph", 3, "Table 1 (cited)", false,
             {{"fig:K6", "K6", {true, true, true, std::nullopt, std::nullopt, 3, std::nullopt}, ""}}},
            [] { return complete_graph(6); });
        add({"K_{3,4}", "explicit list; label L of Example 1 is vertex L-1", 3, "Table 1 (cited)", false,
             {{"fig:goodOrientation(a)", "K34", {true, false, true, std::nullopt, std::nullopt, 2, true}, ""},
              {"fig:babyheawood", "K34", {true, false, true, std::nullopt, std::nullopt, 2, true},
               "same drawing as fig:goodOrientation(a)"}}},
            k34_labelled);
        add({"K_{4,4}", "complete bipartite", 3, "Table 1 (cited)", false, {{"fig:K44", "K44", none, ""}}},
            [] { return complete_bipartite(4, 4); });
        add({"Hypercube", "4-cube, edges sorted", 3, "Table 1 (cited)", false,
             {{"fig:q_4", "Hypercube",
               {false, false, true, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
               "no connected-skeleton drawing was found; the stored drawing has a disconnected "
               "skeleton, so this flag fails"}}},
            [] { return hypercube(4); });
        add({"Petersen", "generalized Petersen GP(5,2)", 3, "Table 1 (cited); exact search", true,
             {{"fig:goodOrientation(b)", "Petersen",
               {true, false, true, std::nullopt, std::nullopt, 2, false},
               "Table 1 lists the skeleton as disconnected, but a poppy drawing of a connected "
               "graph has a connected skeleton (Lemma 6)"}}},
            [] { return generalized_petersen(5, 2); });
        add({"Heawood", "LCF [5,-5]^7", 3, "Table 1 (cited)", false,
             {{"fig:no3basis1", "Heawood", {true, false, true, std::nullopt, std::nullopt, std::nullopt, std::nullopt}, ""}}},
            [] { return lcf_graph(14, {5, -5}); });
        add({"McGee", "LCF [12,7,-7]^8", 3, "Table 1 (cited)", false, {{"fig:McGee", "McGee", none, ""}}},
            [] { return lcf_graph(24, {12, 7, -7}); });
        add({"Nauru", "LCF [5,-9,7,-7,9,-5]^4", 3, "Table 1 (cited)", false, {{"fig:Nauru", "Nauru", none, ""}}},
            [] { return lcf_graph(24, {5, -9, 7, -7, 9, -5}); });
        add({"Franklin", "LCF [5,-5]^6", 3, "Table 1 (cited)", false, {{"fig:Franklin", "Franklin", none, ""}}},
            [] { return lcf_graph(12, {5, -5}); });
        add({"Desargues", "generalized Petersen GP(10,3)", 3, "Prop 4 explicit basis", false,
             {{"fig:Desargues", "Desargues", none, ""}}},
            [] { return generalized_petersen(10, 3); });
        add({"Tutte8Cage", "LCF [-13,-9,7,-7,9,13]^5", 4, "Prop 5: at least 4 (girth 8)", false, {}},
            [] { return lcf_graph(30, {-13, -9, 7, -7, 9, 13}); });
        add({"SubdividedTutte8Cage", "Tutte 8-cage, four edges subdivided once", 4,
             "Prop 5: at least 4 (contraction chain)", false,
             {{"fig:no3basis2", "SubdividedTutte8Cage", none, ""}}},
            [] { return graph_from_json(fixture_document("SubdividedTutte8Cage")["graph"]); });
        add({"CubeDiagonals", "cube plus both diagonals of every face", 3,
             "optimal 1-planar (Thm 4 corollary); upper bound only", false,
             {{"optimal", "CubeDiagonals", {true, true, true, true, std::nullopt, 6, std::nullopt}, ""}}},
            cube_with_diagonals);
        add({"K4Crossing", "K4 drawn with one crossing", 2, "counting bound and full-crossing 3-basis", true,
             {{"crossing", "K4Crossing", {true, true, true, true, true, 1, std::nullopt}, ""}}},
            [] { return complete_graph(4); });
        return v;
    }();
    return r;
}

const Registered& find(const std::string& name) {
    for (auto& r : registry())
        if (r.entry.name == name) return r;
    throw UnknownEntry("unknown catalog entry: " + name);
}

bool lower_bound_only(const CatalogEntry& e) {
    return e.name == "Tutte8Cage" || e.name == "SubdividedTutte8Cage";
}

}  // namespace

std::vector<std::string> list_entries() {
    std::vector<std::string> out;
    for (auto& r : registry()) out.push_back(r.entry.name);
    return out;
}

const CatalogEntry& catalog_entry(const std::string& name) { return find(name).entry; }

Graph entry_graph(const std::string& name) { return find(name).build(); }

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : detail::fixture_sources()) out.push_back(k);
    return out;
}

json fixture_document(const std::string& fixture) {
    auto& src = detail::fixture_sources();
    auto it = src.find(fixture);
    if (it == src.end()) throw UnknownEntry("unknown fixture: " + fixture);
    json doc;
    try {
        doc = json::parse(it->second);
    } catch (const json::exception& e) {
        throw InputError("fixture " + fixture + ": " + e.what());
    }
    std::string want = doc.value("checksum", "");
    if (fixture_checksum(doc) != want) throw InputError("fixture " + fixture + ": checksum mismatch");
    return doc;
}

OnePlaneEmbedding entry_embedding(const std::string& name, const std::string& figure) {
    auto& e = find(name).entry;
    for (auto& d : e.drawings)
        if (d.figure == figure) return embedding_from_json(fixture_document(d.fixture));
    throw UnknownEntry(name + " has no drawing " + figure);
}

EdgeId k34_edge(int a, int b) {
    Graph g = k34_labelled();
    for (auto& e : g.edges())
        if ((e.u == a - 1 && e.v == b - 1) || (e.u == b - 1 && e.v == a - 1)) return e.id;
    throw std::invalid_argument("K_{3,4} has no edge " + std::to_string(a) + std::to_string(b));
}

namespace {
EdgeSet labelled_cycle(const std::string& s) {
    std::vector<EdgeId> ids;
    for (size_t i = 0; i < s.size(); ++i) ids.push_back(k34_edge(s[i] - '0', s[(i + 1) % s.size()] - '0'));
    return EdgeSet::of(12, ids);
}
}  // namespace

Basis k34_example_basis() {
    Basis b;
    for (const char* c : {"367452", "234567", "1436", "4127", "4521", "2567"}) b.push_back(labelled_cycle(c));
    return b;
}

std::vector<EdgeId> k34_example_tree() {
    // T + 45 is the cycle 1-4-5-6
    return {k34_edge(1, 4), k34_edge(1, 6), k34_edge(5, 6), k34_edge(1, 2), k34_edge(3, 6), k34_edge(6, 7)};
}

EntryReport verify_entry(const std::string& name, const VerifyOptions& opt) {
    const Registered& reg = find(name);
    const CatalogEntry& ce = reg.entry;
    EntryReport rep{name, true, {}, json::object()};
    auto fail = [&](const std::string& m) {
        rep.ok = false;
        rep.failures.push_back(m);
    };
    Graph g = reg.build();
    int beta = betti(g);
    rep.detail["vertices"] = g.n();
    rep.detail["edges"] = g.m();
    rep.detail["betti"] = beta;
    rep.detail["expected_basis_number"] = ce.expected_basis_number;
    rep.detail["expected_is_lower_bound"] = lower_bound_only(ce);
    rep.detail["provenance"] = ce.provenance;

    std::optional<int> upper;  // best verified builder bound
    int lower = 0;
    auto note_upper = [&](int k) { upper = upper ? std::min(*upper, k) : k; };

    json drawings = json::array();
    for (auto& d : ce.drawings) {
        json dj{{"figure", d.figure}};
        if (!d.note.empty()) dj["note"] = d.note;
        std::string tag = name + " " + d.figure + ": ";
        try {
            auto e = entry_embedding(name, d.figure);
            if (!(e.graph() == g)) fail(tag + "fixture graph differs from the presentation");
            auto viol = validate(e);
            dj["violations"] = violations_to_json(viol);
            if (!viol.empty()) {
                fail(tag + "drawing does not validate");
                drawings.push_back(dj);
                continue;
            }
            auto p = classify(e);
            dj["profile"] = profile_to_json(p);
            auto check = [&](const char* flag, std::optional<bool> want, bool got) {
                if (want && *want != got)
                    fail(tag + flag + " expected " + (*want ? "true" : "false") + ", got " + (got ? "true" : "false"));
            };
            check("poppy", d.expected.poppy, p.poppy);
            check("locally_maximal", d.expected.locally_maximal, p.locally_maximal);
            check("connected_skeleton", d.expected.connected_skeleton, p.connected_skeleton);
            check("full_crossing", d.expected.full_crossing, p.full_crossing);
            check("ic", d.expected.ic, p.ic);
            if (d.expected.crossings && *d.expected.crossings != p.crossings)
                fail(tag + "expected " + std::to_string(*d.expected.crossings) + " crossings");
            if (p.poppy && connected(g) && !p.connected_skeleton) fail(tag + "poppy but skeleton disconnected");

            json builders = json::object();
            auto run = [&](const char* what, int k, const std::function<Basis()>& make) {
                try {
                    auto r = verify_kbasis(g, make(), k);
                    builders[what] = {{"k", k}, {"verdict", r.verdict}, {"max_charge", r.max_charge}};
                    if (r.verdict) note_upper(r.max_charge);
                    else fail(tag + what + " output is not a " + std::to_string(k) + "-basis");
                } catch (const std::exception& ex) {
                    builders[what] = {{"error", ex.what()}};
                    fail(tag + what + ": " + ex.what());
                }
            };
            if (p.connected_skeleton) run("connected_skeleton_4basis", 4, [&] { return connected_skeleton_4basis(e); });
            if (p.full_crossing && two_connected(g)) run("fullcrossing_3basis", 3, [&] { return fullcrossing_3basis(e); });
            if (p.poppy) {
                auto o = balanced_skirt_orientation(e);
                bool found = std::holds_alternative<BalancedOrientation>(o);
                dj["balanced_orientation"] = found;
                if (d.expected.balanced && *d.expected.balanced != found)
                    fail(tag + "balanced orientation expected " + (*d.expected.balanced ? "to exist" : "to be infeasible"));
                if (found)
                    run("poppy_3basis", 3, [&] { return poppy_3basis(e, std::get<BalancedOrientation>(o)); });
            }
            if (!p.connected_skeleton) {
                auto aux = auxiliary_graph(e);
                // a disconnected Q cannot hold any spanning tree
                bool packs = aux.q.n() >= 1 && connected(aux.q) &&
                             std::holds_alternative<TreePacking>(tree_packing(aux.q, 3));
                dj["auxiliary"] = {{"components", aux.q.n()}, {"edges", aux.q.m()}, {"three_trees", packs}};
                if (packs) run("disconnected_skeleton_8basis", 8, [&] { return disconnected_skeleton_8basis(e); });
            }
            dj["builders"] = builders;
        } catch (const std::exception& ex) {
            fail(tag + ex.what());
        }
        drawings.push_back(dj);
    }
    rep.detail["drawings"] = drawings;

    if (name == "Desargues") {
        auto [dg, b] = desargues_3basis();
        auto r = verify_kbasis(dg, b, 3);
        rep.detail["explicit_basis"] = report_to_json(r);
        if (!(dg == g)) fail("Desargues: explicit basis graph differs from the presentation");
        if (r.verdict) note_upper(r.max_charge);
        else fail("Desargues: explicit basis is not a 3-basis");
    }
    if (name == "K_{3,4}") {
        auto r = verify_kbasis(g, k34_example_basis(), 3);
        rep.detail["explicit_basis"] = report_to_json(r);
        if (r.verdict) note_upper(r.max_charge);
        else fail("K_{3,4}: Example 1 basis is not a 3-basis");
    }

    if (beta > 0) {
        lower = counting_lower_bound(g);
        rep.detail["counting_bound"] = lower;
    }
    if (name == "Tutte8Cage") {
        auto c = cubic_girth_certificate(g);
        rep.detail["cubic_girth_certificate"] = c ? json(*c) : json(nullptr);
        if (c) lower = std::max(lower, *c);
    }
    if (name == "SubdividedTutte8Cage") {
        std::vector<ChainStep> chain;
        for (VertexId v : g.vertices())
            if (g.degree(v) == 2) chain.push_back({ChainStep::Unsubdivide, v});
        auto base = lower_bound_by_contraction_chain(g, chain, 0).base;
        auto c = cubic_girth_certificate(base);
        bool iso = isomorphic(base, entry_graph("Tutte8Cage"));
        rep.detail["chain_length"] = chain.size();
        rep.detail["chain_base_is_tutte8cage"] = iso;
        rep.detail["max_degree"] = g.max_degree();
        if (!iso) fail("SubdividedTutte8Cage: chain does not recover Tutte8Cage");
        if (g.n() != 34 || g.max_degree() != 3) fail("SubdividedTutte8Cage: expected 34 vertices, max degree 3");
        if (c) lower = std::max(lower, lower_bound_by_contraction_chain(g, chain, *c).lower_bound);
    }

    if (beta > 0 && beta <= opt.exact_betti_limit) {
        auto t0 = std::chrono::steady_clock::now();
        auto res = exact_basis_number(g, opt.budget);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (auto* c = std::get_if<BasisNumberCertificate>(&res)) {
            rep.detail["exact"] = {{"value", c->value}, {"exhaustive", c->exhaustive}, {"seconds", secs}};
            lower = std::max(lower, c->value);
            note_upper(c->value);
            if (ce.expected_basis_number && c->value != ce.expected_basis_number)
                fail(name + ": exact basis number " + std::to_string(c->value) + ", expected " +
                     std::to_string(ce.expected_basis_number));
        } else {
            auto& b = std::get<BudgetExceeded>(res);
            rep.detail["exact"] = budget_to_json(b);
            lower = std::max(lower, b.lower_bound);
            if (b.upper_bound) note_upper(*b.upper_bound);
        }
    }
    rep.detail["lower_bound"] = lower;
    rep.detail["upper_bound"] = upper ? json(*upper) : json(nullptr);
    if (int x = ce.expected_basis_number) {
        if (lower > x && !lower_bound_only(ce)) fail(name + ": proven lower bound exceeds the expected value");
        if (upper && *upper < x) fail(name + ": a basis beats the expected value");
        if (lower_bound_only(ce) && lower < x) fail(name + ": could not certify the lower bound " + std::to_string(x));
    }
    rep.detail["ok"] = rep.ok;
    rep.detail["failures"] = rep.failures;
    return rep;
}

}  // namespace kb
