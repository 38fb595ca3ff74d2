#pragma once
// Exact basis numbers by branch and bound over the cycle space, the naive
// oracle used to cross-check it, and the counting lower bounds.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kbasis/cycle_space.hpp"
#include "kbasis/graph.hpp"

namespace kb {

struct SearchBudget {
    long long max_elements = 1LL << 16;  // cycle-space size cap
    double max_seconds = 60.0;
    long long max_nodes = 200'000'000;
    int threads = 1;
};

struct BasisNumberCertificate {
    int value = 0;
    Basis witness;
    std::string lower_bound_reason;  // "counting" or "exhaustion"
    bool exhaustive = false;         // the search for value-1 ran to completion
    int counting_bound = 0;
    long long nodes = 0;
};

struct BudgetExceeded {
    int lower_bound = 0;              // best proven so far
    std::optional<int> upper_bound;   // from a witness, if one was found
    std::string reason;
    long long nodes = 0;
};

std::variant<BasisNumberCertificate, BudgetExceeded> exact_basis_number(
    const Graph& g, const SearchBudget& budget = {});

// ceil(girth * betti / m); throws GraphError on forests
int counting_lower_bound(const Graph& g);

// floor(floor(3k/2) * n / (n/2 + 1)); a cubic graph of larger girth has no k-basis
int cubic_girth_bound(int n, int k);

// Capacitated k-basis search: elements drawn from `candidates` (searched in
// the given order), at most capacity[e] elements through edge e.
enum class SearchOutcome { Found, None, Budget };
struct CapacitatedResult {
    SearchOutcome outcome = SearchOutcome::None;
    Basis witness;
    long long nodes = 0;
};
CapacitatedResult search_basis(const Graph& g, const std::vector<EdgeSet>& candidates,
                               const std::vector<int>& capacity, const SearchBudget& budget);

// Nonzero cycle-space elements sorted by (size, lexicographic).
std::vector<EdgeSet> sorted_cycle_space(const Graph& g, long long cap);

// Independent oracle: tries every betti-subset of the cycle space. Small
// graphs only (betti <= 6 keeps it under a few seconds).
int naive_basis_number(const Graph& g);
bool naive_has_kbasis(const Graph& g, int k);

// ---------------------------------------------------------------- chains

struct ChainStep {
    enum Kind { Contract, Unsubdivide } kind;
    int id;  // edge id for Contract, vertex id for Unsubdivide
};

struct ChainResult {
    Graph base;       // graph after all steps
    int lower_bound;  // bound carried back to the input graph
};

// Applies the steps (contraction can only lower the basis number and
// unsubdividing keeps it) and returns base_bound as a bound for g.
ChainResult lower_bound_by_contraction_chain(const Graph& g, const std::vector<ChainStep>& chain,
                                             int base_bound);

// Largest k+1 such that a cubic graph's girth exceeds cubic_girth_bound(n, k);
// nullopt when the graph is not cubic or no k >= 1 is excluded.
std::optional<int> cubic_girth_certificate(const Graph& g);

}  // namespace kb
