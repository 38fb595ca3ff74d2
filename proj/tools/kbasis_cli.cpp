// kbasis: command-line front end.
//
// Every command prints one JSON document on stdout (DOT for --format dot)
// and diagnostics on stderr. Exit codes: 0 ok, 1 verdict false, 2 input
// error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kbasis/catalog.hpp"
#include "kbasis/constructions.hpp"
#include "kbasis/cycle_space.hpp"
#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"
#include "kbasis/io.hpp"
#include "kbasis/search.hpp"
#include "kbasis/transforms.hpp"

namespace {

using namespace kb;

enum Exit { Ok = 0, VerdictFalse = 1, BadInput = 2, OverBudget = 3 };

json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// accepts a bare graph or any document with a "graph" field
Graph read_graph(const json& j) {
    return graph_from_json(j.is_object() && j.contains("graph") && j["graph"].is_object() &&
                                   j["graph"].contains("edges")
                               ? j["graph"]
                               : j);
}

struct GraphBasis {
    Graph g;
    Basis b;
};

GraphBasis read_basis_doc(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("elements"))
        throw InputError("basis document needs \"graph\" and \"elements\"");
    GraphBasis gb{graph_from_json(j["graph"]), {}};
    gb.b = basis_from_json(gb.g, j["elements"]);
    return gb;
}

json basis_doc(const Graph& g, const Basis& b, const BasisReport& r) {
    return {{"graph", graph_to_json(g)}, {"elements", basis_to_json(b)}, {"report", report_to_json(r)}};
}

double default_budget() {
    if (const char* s = std::getenv("KBASIS_BUDGET_SECONDS")) {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            std::cerr << "ignoring KBASIS_BUDGET_SECONDS=" << s << "\n";
        }
    }
    return 60.0;
}

struct Options {
    std::string input = "-";
    unsigned seed = 1;
    double budget_seconds = default_budget();
    int threads = 1;
    // construct
    std::string method;
    // verify-kbasis
    int k = 0;
    // transform
    std::string op;
    int edge = -1, u = -1, v = -1, ell = -1;
    std::string gadget, mode = "exact";
    std::optional<int> transform_k;
    // basis-number
    bool exact = false;
    int cap_dim = 16;
    // catalog
    std::string name, format = "json", figure;
};

int cmd_validate(const Options& o) {
    auto e = embedding_from_json(read_json(o.input));
    auto v = validate(e);
    emit({{"valid", v.empty()}, {"violations", violations_to_json(v)}});
    return v.empty() ? Ok : VerdictFalse;
}

int cmd_classify(const Options& o) {
    auto e = embedding_from_json(read_json(o.input));
    auto v = validate(e);
    if (!v.empty()) throw InputError("invalid embedding: " + v[0].kind + ": " + v[0].detail);
    emit(profile_to_json(classify(e)));
    return Ok;
}

int cmd_construct(const Options& o) {
    Graph g;
    Basis b;
    int k = 0;
    if (o.method == "desargues") {
        std::tie(g, b) = desargues_3basis();
        k = 3;
    } else {
        auto e = embedding_from_json(read_json(o.input));
        require_valid(e);
        g = e.graph();
        if (o.method == "facial") {
            b = planar_2basis(e);
            k = 2;
        } else if (o.method == "sk4") {
            b = connected_skeleton_4basis(e);
            k = 4;
        } else if (o.method == "aux8") {
            b = disconnected_skeleton_8basis(e);
            k = 8;
        } else if (o.method == "full3") {
            b = fullcrossing_3basis(e);
            k = 3;
        } else if (o.method == "poppy3") {
            auto ori = balanced_skirt_orientation(e);
            if (std::holds_alternative<Infeasible>(ori)) {
                emit({{"verdict", false}, {"reason", "no balanced skirt orientation"}});
                return VerdictFalse;
            }
            b = poppy_3basis(e, std::get<BalancedOrientation>(ori));
            k = 3;
        }
    }
    auto r = verify_kbasis(g, b, k);
    emit(basis_doc(g, b, r));
    return r.verdict ? Ok : VerdictFalse;
}

int cmd_verify(const Options& o) {
    auto gb = read_basis_doc(read_json(o.input));
    auto r = verify_kbasis(gb.g, gb.b, o.k);
    emit(report_to_json(r));
    return r.verdict ? Ok : VerdictFalse;
}

int cmd_transform(const Options& o) {
    auto gb = read_basis_doc(read_json(o.input));
    require_basis(gb.g, gb.b);
    int k0 = max_charge(charges(gb.g, gb.b));
    auto need_edge = [&] {
        if (!gb.g.has_edge(o.edge)) throw InputError("--edge: unknown edge " + std::to_string(o.edge));
    };
    Graph g;
    Basis b;
    int k = k0;  // bound the transform guarantees
    if (o.op == "contract") {
        need_edge();
        auto t = contract_basis(gb.g, gb.b, o.edge);
        g = std::move(t.graph), b = std::move(t.basis);
    } else if (o.op == "add-edge") {
        if (!gb.g.has_vertex(o.u) || !gb.g.has_vertex(o.v)) throw InputError("--u/--v: unknown vertex");
        auto t = add_edge_basis(gb.g, gb.b, o.u, o.v);
        g = std::move(t.graph), b = std::move(t.basis);
        k = k0 + 1;
    } else if (o.op == "duplicate") {
        need_edge();
        auto t = duplicate_edge_basis(gb.g, gb.b, o.edge);
        g = std::move(t.graph), b = std::move(t.basis);
        k = std::max(k0, 2);
    } else if (o.op == "subdivide") {
        need_edge();
        auto t = subdivide_basis(gb.g, gb.b, o.edge);
        g = std::move(t.graph), b = std::move(t.basis);
    } else {  // replace-edge
        need_edge();
        if (o.gadget.empty()) throw InputError("replace-edge needs --gadget");
        json gj = read_json(o.gadget);
        if (!gj.is_object() || !gj.contains("graph") || !gj.contains("s") || !gj.contains("t"))
            throw InputError("gadget needs \"graph\", \"s\", \"t\"");
        TerminalGraph h{graph_from_json(gj["graph"]), gj["s"].get<int>(), gj["t"].get<int>()};
        require_terminal(h);
        int ell = charges(gb.g, gb.b)[o.edge];
        SearchBudget budget;
        budget.max_seconds = o.budget_seconds;
        auto ab = augmented_basis_number(h, ell, o.mode == "planar-outer" ? AugmentedMode::PlanarOuter
                                                                          : AugmentedMode::Exact,
                                         budget);
        auto t = replace_edge_basis(gb.g, gb.b, o.edge, h, ab);
        g = std::move(t.graph), b = std::move(t.basis);
        k = std::max(k0, ab.k);
    }
    if (o.transform_k) k = *o.transform_k;
    auto r = verify_kbasis(g, b, k);
    emit(basis_doc(g, b, r));
    return r.verdict ? Ok : VerdictFalse;
}

int cmd_basis_number(const Options& o) {
    Graph g = read_graph(read_json(o.input));
    if (!o.exact) {
        json j{{"betti", betti(g)}};
        j["counting_bound"] = betti(g) ? json(counting_lower_bound(g)) : json(0);
        auto cg = cubic_girth_certificate(g);
        j["cubic_girth_bound"] = cg ? json(*cg) : json(nullptr);
        emit(j);
        return Ok;
    }
    SearchBudget budget;
    budget.max_seconds = o.budget_seconds;
    budget.max_elements = 1LL << std::min(o.cap_dim, 62);
    budget.threads = o.threads;
    auto res = exact_basis_number(g, budget);
    if (auto* b = std::get_if<BudgetExceeded>(&res)) {
        emit(budget_to_json(*b));
        return OverBudget;
    }
    emit(certificate_to_json(std::get<BasisNumberCertificate>(res)));
    return Ok;
}

int cmd_catalog(const Options& o) {
    if (o.op == "list") {
        json a = json::array();
        for (auto& n : list_entries()) {
            auto& ce = catalog_entry(n);
            json figs = json::array();
            for (auto& d : ce.drawings) figs.push_back(d.figure);
            a.push_back({{"name", n},
                         {"presentation", ce.presentation},
                         {"expected_basis_number", ce.expected_basis_number},
                         {"certified_here", ce.certified_here},
                         {"drawings", figs}});
        }
        emit(a);
        return Ok;
    }
    auto& ce = catalog_entry(o.name);
    if (o.op == "verify") {
        VerifyOptions vo;
        vo.budget.max_seconds = o.budget_seconds;
        vo.budget.threads = o.threads;
        auto rep = verify_entry(o.name, vo);
        for (auto& f : rep.failures) std::cerr << f << "\n";
        emit({{"name", rep.name}, {"ok", rep.ok}, {"failures", rep.failures}, {"detail", rep.detail}});
        return rep.ok ? Ok : VerdictFalse;
    }
    // export: the requested drawing, else the first one, else the bare graph
    std::string fig = o.figure;
    if (fig.empty() && !ce.drawings.empty()) fig = ce.drawings.front().figure;
    if (fig.empty()) {
        Graph g = entry_graph(o.name);
        if (o.format == "dot") std::cout << graph_to_dot(g);
        else emit(graph_to_json(g));
    } else {
        auto e = entry_embedding(o.name, fig);
        if (o.format == "dot") std::cout << embedding_to_dot(e);
        else emit(embedding_to_json(e));
    }
    return Ok;
}

int cmd_unbounded(const Options& o) {
    Graph g = read_graph(read_json(o.input));
    if (!g.simple()) throw InputError("unbounded-family needs a simple graph");
    auto dr = degree_reduce(g);
    std::vector<VertexId> order = dr.graph.vertices();
    auto sch = circular_layout_schedule(dr.graph, order, o.seed);
    auto sd = make_1planar_by_subdivision(dr.graph, sch, SubdivisionPolicy::IndependentCrossings);
    auto chain = sd.chain;
    chain.insert(chain.end(), dr.chain.begin(), dr.chain.end());
    auto back = lower_bound_by_contraction_chain(sd.graph, chain, o.ell);
    auto prof = classify(sd.embedding);
    json steps = json::array();
    for (auto& st : chain)
        steps.push_back({{"kind", st.kind == ChainStep::Contract ? "contract" : "unsubdivide"}, {"id", st.id}});
    emit({{"embedding", embedding_to_json(sd.embedding)},
          {"max_degree", sd.graph.max_degree()},
          {"ic", prof.ic},
          {"chain", steps},
          {"chain_returns_input", isomorphic(back.base, g)},
          {"lower_bound", back.lower_bound}});
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-bases of graphs and 1-plane embeddings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "seed for randomized tie-breaking");
    app.add_option("--threads", o.threads, "search worker threads")->check(CLI::PositiveNumber);

    auto input = [&](CLI::App* c) { c->add_option("input", o.input, "JSON file, - for stdin"); };

    auto* validate_c = app.add_subcommand("validate", "check an embedding");
    input(validate_c);
    auto* classify_c = app.add_subcommand("classify", "drawing properties of an embedding");
    input(classify_c);

    auto* construct_c = app.add_subcommand("construct", "build a basis from an embedding");
    construct_c->add_option("--method", o.method)
        ->required()
        ->check(CLI::IsMember({"facial", "sk4", "aux8", "full3", "poppy3", "desargues"}));
    input(construct_c);

    auto* verify_c = app.add_subcommand("verify-kbasis", "check a basis document");
    verify_c->add_option("-k", o.k, "charge bound")->required();
    input(verify_c);

    auto* transform_c = app.add_subcommand("transform", "apply an operation and carry the basis");
    transform_c->add_option("op", o.op)
        ->required()
        ->check(CLI::IsMember({"contract", "add-edge", "duplicate", "subdivide", "replace-edge"}));
    transform_c->add_option("input", o.input, "basis document, - for stdin");
    transform_c->add_option("--edge", o.edge);
    transform_c->add_option("--u", o.u);
    transform_c->add_option("--v", o.v);
    transform_c->add_option("--gadget", o.gadget, "terminal graph {graph, s, t}");
    transform_c->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "planar-outer"}));
    transform_c->add_option("-k", o.transform_k, "check against this bound instead of the guaranteed one");
    transform_c->add_option("--budget-seconds", o.budget_seconds);

    auto* bn_c = app.add_subcommand("basis-number", "bounds or the exact basis number of a graph");
    bn_c->add_flag("--exact", o.exact, "run the exact search");
    bn_c->add_option("--budget-seconds", o.budget_seconds, "default $KBASIS_BUDGET_SECONDS or 60");
    bn_c->add_option("--cap-dim", o.cap_dim, "give up when the cycle space has dimension above this")
        ->check(CLI::Range(1, 62));
    input(bn_c);

    auto* cat_c = app.add_subcommand("catalog", "named graphs");
    cat_c->require_subcommand(1);
    auto* cat_list = cat_c->add_subcommand("list");
    auto* cat_verify = cat_c->add_subcommand("verify");
    cat_verify->add_option("name", o.name)->required();
    cat_verify->add_option("--budget-seconds", o.budget_seconds);
    auto* cat_export = cat_c->add_subcommand("export");
    cat_export->add_option("name", o.name)->required();
    cat_export->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
    cat_export->add_option("--figure", o.figure, "drawing key, default the first");

    auto* unb_c = app.add_subcommand("unbounded-family", "degree reduction and subdivision into an IC drawing");
    unb_c->add_option("--ell", o.ell, "known lower bound for the input's basis number")->required();
    input(unb_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*validate_c) return cmd_validate(o);
        if (*classify_c) return cmd_classify(o);
        if (*construct_c) return cmd_construct(o);
        if (*verify_c) return cmd_verify(o);
        if (*transform_c) return cmd_transform(o);
        if (*bn_c) return cmd_basis_number(o);
        if (*unb_c) return cmd_unbounded(o);
        if (*cat_list) o.op = "list";
        if (*cat_verify) o.op = "verify";
        if (*cat_export) o.op = "export";
        return cmd_catalog(o);
    } catch (const CapExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        emit({{"budget_exceeded", true}, {"reason", e.what()}});
        return OverBudget;
    } catch (const json::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return BadInput;
    } catch (const std::invalid_argument& e) {  // InputError, PreconditionError, UnknownEntry, ...
        std::cerr << "input: " << e.what() << "\n";
        return BadInput;
    } catch (const GraphError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return BadInput;
    } catch (const InvalidEmbedding& e) {
        std::cerr << "input: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    }
}
