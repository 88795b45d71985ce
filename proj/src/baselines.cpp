#include "grundy/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

void max_clique(const Graph& g, int size, VertexSet cand, VertexSet excl, int& best) {
    if (cand.empty()) {
        if (excl.empty()) best = std::max(best, size);
        return;
    }
    if (size + cand.size() <= best) return;
    int pivot = (cand | excl).front();
    int pivot_hits = -1;
    for (int u : cand | excl) {
        const int hits = (cand & g.neighbors(u)).size();
        if (hits > pivot_hits) {
            pivot = u;
            pivot_hits = hits;
        }
    }
    for (int v : cand - g.neighbors(pivot)) {
        max_clique(g, size + 1, cand & g.neighbors(v), excl & g.neighbors(v), best);
        cand.erase(v);
        excl.insert(v);
    }
}

bool colorable(const Graph& g, const std::vector<int>& order, std::size_t idx, int k,
               std::vector<int>& color, int used) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    // symmetry breaking: a fresh color is only ever the next unused one
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (int u : g.neighbors(v)) {
            if (color[u] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        color[v] = c;
        if (colorable(g, order, idx + 1, k, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

int clique_number_bf(const Graph& g) {
    if (g.order() > kBaselineLimit) throw SizeLimitExceeded("clique_number_bf", g.order(), kBaselineLimit);
    int best = 0;
    max_clique(g, 0, g.vertices(), {}, best);
    return best;
}

int chromatic_number_bf(const Graph& g) {
    const int n = g.order();
    if (n > kBaselineLimit) throw SizeLimitExceeded("chromatic_number_bf", n, kBaselineLimit);
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = clique_number_bf(g);; ++k) {
        std::vector<int> color(n, -1);
        if (colorable(g, order, 0, k, color, 0)) return k;
    }
}

}  // namespace grundy
