#pragma once

#include <string>
#include <string_view>

#include "grundy/graph.hpp"

namespace grundy {

/// Largest order representable in the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Text of the form "n m" followed by m lines "u v". Duplicate edges collapse.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 for 0 <= n <= 62. A leading ">>graph6<<" header and trailing
/// whitespace are accepted; nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace grundy
