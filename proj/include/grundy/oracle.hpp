#pragma once

#include <vector>

#include "grundy/first_fit.hpp"
#include "grundy/graph.hpp"

// Exponential ground truth. Every entry point refuses inputs above its limit.
namespace grundy::oracle {

inline constexpr int kMisLimit = 16;
inline constexpr int kGrundyLimit = 12;

/// All maximal independent sets, ascending by bitset value.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
/// Maximal independent sets of the subgraph induced by `within` (original labels).
std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within);

/// Grundy number via Gamma(G) = max over maximal independent M of 1 + Gamma(G - M),
/// memoized on vertex subsets.
int grundy_bf(const Graph& g);

/// An optimal peeling sequence: the first-fit coloring reached by the recursion.
FirstFitColoring grundy_bf_coloring(const Graph& g);

enum class Verdict {
    Ok,
    VertexOutOfRange,
    EmptyClass,
    Overlap,
    Uncovered,
    NotIndependent,
    MissingNeighbor,  // some vertex of a later class misses an earlier class
};

const char* to_string(Verdict v);

struct FirstFitCheck {
    Verdict verdict = Verdict::Ok;
    int class_index = -1;  // offending class, when applicable
    int vertex = -1;       // offending vertex, when applicable

    bool ok() const { return verdict == Verdict::Ok; }
    explicit operator bool() const { return ok(); }
};

/// Classes must partition V(g) into nonempty independent sets, and every vertex
/// of class j must have a neighbor in every class i < j.
FirstFitCheck verify_first_fit(const Graph& g, const FirstFitColoring& c);

}  // namespace grundy::oracle
