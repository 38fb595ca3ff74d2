#pragma once
// Named graphs with their 1-plane drawings (JSON fixtures compiled into the
// library) and the flags and basis numbers Table 1 lists for them.

#include <optional>
#include <string>
#include <vector>

#include "kbasis/embedding.hpp"
#include "kbasis/graph.hpp"
#include "kbasis/io.hpp"
#include "kbasis/search.hpp"

namespace kb {

struct ExpectedFlags {
    std::optional<bool> poppy, locally_maximal, connected_skeleton, full_crossing, ic;
    std::optional<int> crossings;
    std::optional<bool> balanced;  // balanced skirt orientation exists
};

struct CatalogDrawing {
    std::string figure;   // figure key, e.g. "fig:K6"
    std::string fixture;  // fixture name under data/fixtures
    ExpectedFlags expected;
    std::string note;     // where the stored expectation departs from the table
};

struct CatalogEntry {
    std::string name;
    std::string presentation;  // how the graph is generated
    int expected_basis_number = 0;
    std::string provenance;    // where the expected value comes from
    bool certified_here = false;  // the suite can prove both bounds
    std::vector<CatalogDrawing> drawings;
};

class UnknownEntry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> list_entries();
const CatalogEntry& catalog_entry(const std::string& name);
Graph entry_graph(const std::string& name);
OnePlaneEmbedding entry_embedding(const std::string& name, const std::string& figure);

// raw fixture document (checksum verified; throws InputError on mismatch)
json fixture_document(const std::string& fixture);
std::vector<std::string> fixture_names();

// Labels 1..7 of K_{3,4} (Fig. 1) are vertices 0..6; the six cycles of
// Example 1 (five quoted plus 2567) and the gray tree T.
Basis k34_example_basis();
std::vector<EdgeId> k34_example_tree();
EdgeId k34_edge(int label_a, int label_b);

struct VerifyOptions {
    SearchBudget budget{};
    int exact_betti_limit = 12;
};

// classify vs expected flags, the builders that apply, counting bounds and
// (for small betti) the exact search.
struct EntryReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    json detail;
};
EntryReport verify_entry(const std::string& name, const VerifyOptions& opt = {});

}  // namespace kb
