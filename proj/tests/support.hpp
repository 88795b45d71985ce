#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

#ifndef GRUNDY_TEST_DATA_DIR
#define GRUNDY_TEST_DATA_DIR "tests/data"
#endif

// Small independent oracles for tests. They use nothing from the library
// beyond the Graph type, so they check the library rather than echo it.
namespace testing {

using grundy::Graph;

inline std::vector<std::string> read_lines(const std::string& name) {
    std::ifstream in(std::string(GRUNDY_TEST_DATA_DIR) + "/" + name);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

/// Greedy coloring along one vertex order: each vertex takes the smallest
/// color not used by an earlier neighbor.
inline int greedy_colors(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(g.order(), 0);
    int used = 0;
    for (int v : order) {
        std::vector<bool> taken(g.order() + 2, false);
        for (int u = 0; u < g.order(); ++u) {
            if (color[u] && g.adjacent(u, v)) taken[color[u]] = true;
        }
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

/// Grundy number as the worst greedy coloring over all n! vertex orders.
inline int grundy_by_orderings(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        best = std::max(best, greedy_colors(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// True iff some 4 vertices induce a path.
inline bool has_induced_p4(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d))
                        return true;
                }
    return false;
}

/// Minimum marriages by trying every set of cross-village boy-girl pairs.
/// `village` gives each person's village, `boy` their sex.
inline int marriages_by_pair_subsets(const std::vector<int>& village, const std::vector<bool>& boy) {
    std::vector<std::pair<int, int>> pairs;
    const int n = static_cast<int>(village.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (boy[i] && !boy[j] && village[i] != village[j]) pairs.emplace_back(i, j);
    int best = n;
    const int m = static_cast<int>(pairs.size());
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<int> used(n, 0);
        bool ok = true;
        int size = 0;
        for (int k = 0; k < m && ok; ++k) {
            if (!(mask >> k & 1)) continue;
            ok = !used[pairs[k].first]++ && !used[pairs[k].second]++;
            ++size;
        }
        if (!ok) continue;
        for (const auto& [b, g] : pairs) {
            if (!used[b] && !used[g]) ok = false;
        }
        if (ok) best = std::min(best, size);
    }
    return best;
}

}  // namespace testing
