#pragma once

#include <optional>

#include "grundy/decomp_tree.hpp"
#include "grundy/graph.hpp"

namespace grundy::cograph {

/// Binary cotree of `g`, or nullopt when `g` has an induced P4.
///
/// Repeatedly contracts the lexicographically smallest twin pair (x, y), x < y,
/// i.e. N(x) - {y} == N(y) - {x}: a join node when x and y are adjacent, a
/// union node otherwise. x keeps representing the merged module. The graph is
/// a cograph iff this reduces it to a single vertex. O(n^3) word operations.
std::optional<DecompTree> build_cotree(const Graph& g);

/// Graph realized by a cotree: union = no edges across, join = all edges across.
/// `n` defaults to one more than the largest leaf id.
Graph realize_cotree(const DecompTree& t, int n = -1);
Graph realize_cotree(const MultiwayTree& t, int n = -1);

/// leaf -> 1, union -> max, join -> sum. Equals chi = omega = Grundy of the cograph.
int cotree_chromatic(const DecompTree& t);
/// Same recurrence as cotree_chromatic; both are exposed because they name different invariants.
int cotree_clique(const DecompTree& t);

/// Left-deep binary chaining of same-label children: (a b c) -> ((a b) c).
DecompTree binarize(const MultiwayTree& t);

}  // namespace grundy::cograph
