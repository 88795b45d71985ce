#pragma once

#include <array>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy::switching {

using Triple = std::array<int, 3>;

/// Set of 3-subsets of {0..n-1}, stored explicitly in sorted order.
struct TwoGraph {
    int n = 0;
    std::vector<Triple> triples;  // each ascending; list sorted lexicographically

    bool contains(Triple t) const;
    /// Every 4-subset contains an even number of member triples.
    bool satisfies_parity_axiom() const;

    bool operator==(const TwoGraph&) const = default;
};

/// Toggles every pair with exactly one endpoint in `s`.
Graph seidel_switch(const Graph& g, VertexSet s);

/// Triples spanning one or three edges.
TwoGraph odd_triples(const Graph& g);

}  // namespace grundy::switching
