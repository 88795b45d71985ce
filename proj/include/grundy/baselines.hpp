#pragma once

#include "grundy/graph.hpp"

namespace grundy {

/// Test-only exact baselines; both refuse graphs above this order.
inline constexpr int kBaselineLimit = 20;

/// Maximum clique size by Bron-Kerbosch with pivoting.
int clique_number_bf(const Graph& g);

/// Smallest k admitting a proper k-coloring, trying k = omega, omega+1, ...
int chromatic_number_bf(const Graph& g);

}  // namespace grundy
