#pragma once

#include <optional>
#include <string>

#include "grundy/bw_coloring.hpp"
#include "grundy/decomp_tree.hpp"
#include "grundy/errors.hpp"
#include "grundy/graph.hpp"

namespace grundy::cameron {

/// Size limits for the exponential recognizers, which serve as test oracles.
inline constexpr int kForbiddenScanLimit = 14;
inline constexpr int kTwinScanLimit = 8;

struct Decomposition {
    BWColoring coloring;
    DecompTree tree;  // Crossing/Parallel labels only
};

/// Colors N(pivot) white and the rest black, switches on the white set, and
/// asks for a cotree of the result. On success the cotree's join nodes become
/// parallel nodes and its union nodes crossing nodes; then
/// realize_graph(tree, coloring) == g.
std::optional<Decomposition> recognize_cameron(const Graph& g, int pivot = 0);

/// Parallel nodes connect same-colored pairs across the children, crossing
/// nodes connect opposite-colored pairs.
Graph realize_graph(const DecompTree& t, const BWColoring& c);

enum class Forbidden { C5, Bull, Gem, CoGem };

const char* to_string(Forbidden f);

/// The adjacency of each forbidden graph on vertices 0..4.
Graph forbidden_graph(Forbidden f);

struct ForbiddenSubgraph {
    Forbidden kind;
    VertexSet vertices;
};

/// First 5-subset (in lexicographic order) inducing a C5, bull, gem or co-gem.
/// Refuses n > kForbiddenScanLimit.
std::optional<ForbiddenSubgraph> find_forbidden_subgraph(const Graph& g);

/// A forbidden induced subgraph containing `v`. Every graph rejected with pivot
/// `v` has one: the P4 left after switching on N(v), together with the then
/// isolated `v`, induces a graph switching equivalent to P4 + K1.
std::optional<ForbiddenSubgraph> find_forbidden_subgraph_through(const Graph& g, int v);

/// Whether every induced subgraph on at least two vertices has a twin pair or
/// an anti-twin pair. Refuses n > kTwinScanLimit.
bool has_twin_or_antitwin_everywhere(const Graph& g);

/// Raised when a Cameron graph was required. Carries a forbidden induced
/// subgraph when the graph is small enough to search for one.
class NotCameron : public Error {
public:
    explicit NotCameron(std::optional<ForbiddenSubgraph> witness);

    const std::optional<ForbiddenSubgraph>& witness() const { return witness_; }

private:
    std::optional<ForbiddenSubgraph> witness_;
};

}  // namespace grundy::cameron
