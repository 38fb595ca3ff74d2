#pragma once
// JSON and DOT exchange formats.
//
// graph:     {"vertices": [ids] | n, "edges": [{"id", "u", "v"}, ...] | [[u, v], ...]}
//            (pair form: edge id = position)
// basis:     {"graph": graph, "elements": [[edge ids], ...]}
// embedding: graph fields plus "dummies": [{"vertex": d, "pair": [e, f]}, ...],
//            "rotations": {"v": [dart ids, cyclic], ...}, optional "outer_face".
//            Darts follow OnePlaneEmbedding's segment numbering.
// fixture:   {"graph": graph, "crossings": [[e, f], ...],
//            "rotation": {"v": [neighbour ids, cyclic], ...}}; crossing i is
//            planarization vertex vertex_bound + i (needs a simple G×)

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kbasis/constructions.hpp"
#include "kbasis/cycle_space.hpp"
#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"
#include "kbasis/search.hpp"

namespace kb {

using json = nlohmann::json;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json edgeset_to_json(const EdgeSet& s);
EdgeSet edgeset_from_json(const Graph& g, const json& j);
json basis_to_json(const Basis& b);
Basis basis_from_json(const Graph& g, const json& j);

json embedding_to_json(const OnePlaneEmbedding& e);
// DOT for viewing only; the layout carries no meaning. Edge labels are ids,
// dummies are drawn as small boxes joined by their segments.
std::string graph_to_dot(const Graph& g);
std::string embedding_to_dot(const OnePlaneEmbedding& e);
// throws InputError on malformed documents; the embedding is not validated
OnePlaneEmbedding embedding_from_json(const json& j);

json profile_to_json(const EmbeddingProfile& p);
json report_to_json(const BasisReport& r);
json violations_to_json(const std::vector<Violation>& v);
json certificate_to_json(const BasisNumberCertificate& c);
json budget_to_json(const BudgetExceeded& b);

// 64-bit FNV-1a, hex
std::string fnv1a64(const std::string& bytes);
// checksum of the document with its "checksum" key removed
std::string fixture_checksum(const json& doc);

}  // namespace kb
