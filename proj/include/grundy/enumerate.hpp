#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

// Exhaustive families of small graphs, one representative per isomorphism class.
namespace grundy::enumerate {

inline constexpr int kCanonicalLimit = 11;  // n(n-1)/2 bits must fit a 64-bit code
inline constexpr int kAllGraphsLimit = 7;
inline constexpr int kAllCographsLimit = 9;

/// Isomorphism-invariant code: maximum adjacency code over the vertex orders
/// that list vertices by nonincreasing degree.
std::uint64_t canonical_code(const Graph& g);
Graph from_canonical_code(int n, std::uint64_t code);

/// All graphs on n vertices up to isomorphism, ordered by canonical code.
std::vector<Graph> all_graphs(int n);

/// Canonical string of a cograph's modular decomposition; equal iff isomorphic.
/// Throws InvalidInput on non-cographs.
std::string cograph_signature(const Graph& g);

/// All cographs on n vertices up to isomorphism, ordered by signature.
std::vector<Graph> all_cographs(int n);

}  // namespace grundy::enumerate
