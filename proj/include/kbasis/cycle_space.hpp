#pragma once
// GF(2) edge-set algebra: Eulerian tests, fundamental cycles, rank,
// decomposition and k-basis audits.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "kbasis/graph.hpp"

namespace kb {

// Bit-vector over edge ids. Sets of different widths compare and combine as
// if zero-padded.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int width) : w_((width + 63) / 64, 0) {}
    static EdgeSet of(int width, const std::vector<EdgeId>& ids);

    void set(EdgeId e);
    void reset(EdgeId e);
    void flip(EdgeId e);
    bool test(EdgeId e) const {
        size_t i = size_t(e) >> 6;
        return i < w_.size() && ((w_[i] >> (e & 63)) & 1u);
    }
    EdgeSet& operator^=(const EdgeSet& o);
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
    EdgeSet& operator&=(const EdgeSet& o);
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

    int count() const;
    bool empty() const;
    int lowest() const;  // -1 if empty
    std::vector<EdgeId> ids() const;
    int words() const { return (int)w_.size(); }
    uint64_t word(int i) const { return i < (int)w_.size() ? w_[i] : 0; }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b);
    friend bool operator!=(const EdgeSet& a, const EdgeSet& b) { return !(a == b); }
    // lexicographic by edge id: the set containing the smaller first
    // differing id sorts first
    friend bool operator<(const EdgeSet& a, const EdgeSet& b);

private:
    std::vector<uint64_t> w_;
    void grow(size_t words) {
        if (w_.size() < words) w_.resize(words, 0);
    }
};

using Basis = std::vector<EdgeSet>;

class ForeignEdge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws ForeignEdge when s names an edge id absent from g.
void check_edges(const Graph& g, const EdgeSet& s);

bool is_eulerian(const Graph& g, const EdgeSet& s);

// One cycle per non-forest edge, ascending by that edge's id.
std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningForest& f);

int rank(const std::vector<EdgeSet>& sets);

struct NotInSpan {};

// Incremental GF(2) span with pivot = lowest set bit. Remembers, for each
// stored row, which inserted elements it is the sum of.
class Span {
public:
    // returns true if s was independent of the current span (and adds it)
    bool insert(const EdgeSet& s);
    bool contains(const EdgeSet& s) const;
    int rank() const { return (int)rows_.size(); }
    // indices (insertion order among accepted elements) summing to s
    std::variant<std::vector<int>, NotInSpan> express(const EdgeSet& s) const;

private:
    struct Row {
        EdgeSet v;
        int pivot;
        EdgeSet combo;  // over accepted-element indices
    };
    std::vector<Row> rows_;  // sorted by pivot
    int accepted_ = 0;
    EdgeSet reduce(EdgeSet s, EdgeSet* combo) const;
};

std::vector<int> charges(const Graph& g, const std::vector<EdgeSet>& sets);
int max_charge(const std::vector<int>& ch);

struct BasisReport {
    std::vector<EdgeSet> elements;
    int dimension = 0;   // number of elements
    int betti = 0;
    int rank = 0;
    bool all_eulerian = false;
    bool independent = false;
    bool generates = false;
    std::vector<int> charge;  // dense by edge id
    int max_charge = 0;
    int k = 0;
    bool verdict = false;
};

BasisReport verify_kbasis(const Graph& g, const std::vector<EdgeSet>& candidate, int k);

// indices into basis summing to target, or NotInSpan
std::variant<std::vector<int>, NotInSpan> decompose(const EdgeSet& target,
                                                    const std::vector<EdgeSet>& basis);

class NotGenerating : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Greedy subset keeping the earliest independent elements.
std::vector<EdgeSet> extract_basis(const Graph& g, const std::vector<EdgeSet>& generating);

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All 2^betti Eulerian subgraphs (including the empty set), in Gray-code
// order over the fundamental cycles. Throws CapExceeded above cap.
std::vector<EdgeSet> enumerate_cycle_space(const Graph& g, long long cap);

}  // namespace kb
