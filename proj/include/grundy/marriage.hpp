#pragma once

#include <string>
#include <vector>

#include "grundy/bw_coloring.hpp"
#include "grundy/decomp_tree.hpp"
#include "grundy/graph.hpp"

// Villages of boys and girls, marriages only across villages, and no boy and
// girl from different villages may both stay single. The minimum number of
// marriages is |V| - Grundy number of the associated Cameron graph.
namespace grundy::marriage {

inline constexpr int kBruteForceLimit = 12;

struct Village {
    int boys = 0;
    int girls = 0;
    bool operator==(const Village&) const = default;
};

struct VillageSpec {
    std::vector<Village> villages;

    int population() const;
};

/// Parses "b1,g1 b2,g2 ...".
VillageSpec parse_villages(const std::string& text);

struct VillageGraph {
    Graph graph;          // boys black, girls white; numbered village by village, boys first
    BWColoring coloring;
    DecompTree tree;      // parallel chain over villages; each village a crossing of its boys and girls
};

VillageGraph village_graph(const VillageSpec& spec);

/// Minimum marriages by the four-parameter table (pledged boys, pledged girls,
/// single boys, single girls) over the village tree.
int min_marriages_dp(const VillageSpec& spec);

struct MarriageResult {
    int marriages = 0;
    int population = 0;
    int gamma = 0;
};

/// Runs min_marriages_dp and the Grundy table on the village decomposition and
/// requires population - gamma == marriages; a mismatch raises InternalError.
MarriageResult min_marriages(const VillageSpec& spec);

/// Exhaustive search over cross-village matchings. Population <= kBruteForceLimit.
int min_marriages_bf(const VillageSpec& spec);

}  // namespace grundy::marriage
