#include "kbasis/io.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <string>

namespace kb {

namespace {

[[noreturn]] void bad(const std::string& m) { throw InputError(m); }

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + ": expected an integer");
    return j.get<int>();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json vs = json::array();
    for (VertexId v : g.vertices()) vs.push_back(v);
    json es = json::array();
    for (auto& e : g.edges()) es.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    return {{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        bad("graph needs \"vertices\" and \"edges\"");
    Graph g;
    try {
        const json& vs = j["vertices"];
        if (vs.is_number_integer()) {
            int n = vs.get<int>();
            if (n < 0) bad("negative vertex count");
            g = Graph(n);
        } else if (vs.is_array()) {
            for (auto& v : vs) g.add_vertex(as_int(v, "vertex"));
        } else {
            bad("\"vertices\" must be a count or a list");
        }
        const json& es = j["edges"];
        if (!es.is_array()) bad("\"edges\" must be a list");
        int pos = 0;
        for (auto& e : es) {
            if (e.is_array()) {
                if (e.size() != 2) bad("edge pairs have two endpoints");
                g.add_edge_with_id(pos, as_int(e[0], "edge end"), as_int(e[1], "edge end"));
            } else if (e.is_object()) {
                if (!e.contains("id") || !e.contains("u") || !e.contains("v"))
                    bad("edge objects need id, u, v");
                g.add_edge_with_id(as_int(e["id"], "edge id"), as_int(e["u"], "edge end"),
                                   as_int(e["v"], "edge end"));
            } else {
                bad("edge must be [u, v] or {id, u, v}");
            }
            ++pos;
        }
    } catch (const GraphError& e) {
        bad(e.what());
    }
    return g;
}

json edgeset_to_json(const EdgeSet& s) { return s.ids(); }

EdgeSet edgeset_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) bad("edge set must be a list of edge ids");
    EdgeSet s(g.edge_bound());
    for (auto& x : j) {
        int e = as_int(x, "edge id");
        if (!g.has_edge(e)) bad("unknown edge id " + std::to_string(e));
        s.flip(e);
    }
    return s;
}

json basis_to_json(const Basis& b) {
    json a = json::array();
    for (auto& s : b) a.push_back(edgeset_to_json(s));
    return a;
}

Basis basis_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) bad("basis must be a list of edge sets");
    Basis b;
    for (auto& s : j) b.push_back(edgeset_from_json(g, s));
    return b;
}

json embedding_to_json(const OnePlaneEmbedding& e) {
    json out = graph_to_json(e.graph());
    json d = json::array();
    for (auto& c : e.crossings()) d.push_back({{"vertex", c.dummy}, {"pair", {c.e, c.f}}});
    out["dummies"] = d;
    json rot = json::object();
    for (auto& [v, darts] : e.rotations()) rot[std::to_string(v)] = darts;
    out["rotations"] = rot;
    if (e.outer_face()) out["outer_face"] = *e.outer_face();
    return out;
}

std::string graph_to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (VertexId v : g.vertices()) out += "  " + std::to_string(v) + ";\n";
    for (auto& e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" +
               std::to_string(e.id) + "\"];\n";
    return out + "}\n";
}

std::string embedding_to_dot(const OnePlaneEmbedding& e) {
    std::string out = "graph G {\n";
    for (VertexId v : e.graph().vertices()) out += "  " + std::to_string(v) + ";\n";
    for (auto& c : e.crossings())
        out += "  " + std::to_string(c.dummy) + " [shape=box, width=0.1, height=0.1, label=\"\"];\n";
    for (auto& s : e.segments())
        out += "  " + std::to_string(s.tail) + " -- " + std::to_string(s.head) + " [label=\"" +
               std::to_string(s.edge) + "\"];\n";
    return out + "}\n";
}

namespace {

std::map<VertexId, std::vector<int>> read_rotation(const json& r) {
    if (!r.is_object()) bad("rotation must map vertex ids to lists");
    std::map<VertexId, std::vector<int>> m;
    for (auto& [k, l] : r.items()) {
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            bad("rotation key is not a vertex id: " + k);
        }
        if (!l.is_array()) bad("rotation of " + k + " must be a list");
        auto& dst = m[v];
        for (auto& x : l) dst.push_back(as_int(x, "rotation entry"));
    }
    return m;
}

}  // namespace

OnePlaneEmbedding embedding_from_json(const json& j) {
    if (!j.is_object()) bad("embedding must be an object");
    std::optional<int> outer;
    if (j.contains("outer_face") && !j["outer_face"].is_null()) outer = as_int(j["outer_face"], "outer_face");
    try {
        if (j.contains("graph")) {
            // fixture form
            Graph g = graph_from_json(j["graph"]);
            std::vector<Crossing> cr;
            if (j.contains("crossings")) {
                if (!j["crossings"].is_array()) bad("\"crossings\" must be a list");
                for (auto& c : j["crossings"]) {
                    if (!c.is_array() || c.size() != 2) bad("crossing must be [e, f]");
                    cr.push_back({g.vertex_bound() + (int)cr.size(), as_int(c[0], "edge"), as_int(c[1], "edge")});
                }
            }
            if (!j.contains("rotation")) bad("fixture embedding needs \"rotation\"");
            return OnePlaneEmbedding::from_neighbors(std::move(g), std::move(cr), read_rotation(j["rotation"]), outer);
        }
        Graph g = graph_from_json(j);
        std::vector<Crossing> cr;
        if (j.contains("dummies")) {
            if (!j["dummies"].is_array()) bad("\"dummies\" must be a list");
            for (auto& d : j["dummies"]) {
                if (!d.is_object() || !d.contains("vertex") || !d.contains("pair") || !d["pair"].is_array() ||
                    d["pair"].size() != 2)
                    bad("dummy must be {vertex, pair: [e, f]}");
                cr.push_back({as_int(d["vertex"], "dummy"), as_int(d["pair"][0], "edge"), as_int(d["pair"][1], "edge")});
            }
        }
        if (!j.contains("rotations")) bad("embedding needs \"rotations\"");
        return OnePlaneEmbedding(std::move(g), std::move(cr), read_rotation(j["rotations"]), outer);
    } catch (const InvalidEmbedding& e) {
        bad(e.what());
    } catch (const GraphError& e) {
        bad(e.what());
    }
}

json profile_to_json(const EmbeddingProfile& p) {
    return {{"ic", p.ic},
            {"nic", p.nic},
            {"full_crossing", p.full_crossing},
            {"locally_maximal", p.locally_maximal},
            {"poppy", p.poppy},
            {"near_independent_skirts", p.near_independent_skirts},
            {"connected_skeleton", p.connected_skeleton},
            {"optimal", p.optimal},
            {"crossings", p.crossings}};
}

json report_to_json(const BasisReport& r) {
    return {{"verdict", r.verdict},
            {"k", r.k},
            {"dimension", r.dimension},
            {"betti", r.betti},
            {"rank", r.rank},
            {"all_eulerian", r.all_eulerian},
            {"independent", r.independent},
            {"generates", r.generates},
            {"max_charge", r.max_charge},
            {"charges", r.charge},
            {"elements", basis_to_json(r.elements)}};
}

json violations_to_json(const std::vector<Violation>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back({{"kind", x.kind}, {"detail", x.detail}});
    return a;
}

json certificate_to_json(const BasisNumberCertificate& c) {
    return {{"value", c.value},
            {"exhaustive", c.exhaustive},
            {"lower_bound_reason", c.lower_bound_reason},
            {"counting_bound", c.counting_bound},
            {"nodes", c.nodes},
            {"witness", basis_to_json(c.witness)}};
}

json budget_to_json(const BudgetExceeded& b) {
    json j{{"budget_exceeded", true},
           {"lower_bound", b.lower_bound},
           {"reason", b.reason},
           {"nodes", b.nodes}};
    j["upper_bound"] = b.upper_bound ? json(*b.upper_bound) : json(nullptr);
    return j;
}

std::string fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string fixture_checksum(const json& doc) {
    json body = doc;
    body.erase("checksum");
    return fnv1a64(body.dump());
}

}  // namespace kb
