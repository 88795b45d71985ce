#pragma once

#include <cstdint>

#include "grundy/bw_coloring.hpp"
#include "grundy/decomp_tree.hpp"
#include "grundy/graph.hpp"

namespace grundy {

struct RandomCameron {
    Graph graph;          // the switched graph
    BWColoring coloring;  // white = switch set
    DecompTree cotree;    // cotree of the cograph before switching
};

/// Random binary cotree over a shuffled vertex order (uniform split sizes, each
/// internal node a join with probability p_join), realized as a cograph and
/// then Seidel-switched on a random white set (each vertex white with
/// probability p_white). Deterministic in `seed`.
RandomCameron gen_random_cameron(int n, double p_join, double p_white, std::uint64_t seed);

/// Cograph from the same random cotree process, without switching.
RandomCameron gen_random_cograph(int n, double p_join, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph gen_random_graph(int n, double p, std::uint64_t seed);

}  // namespace grundy
