#include "grundy/switching.hpp"

#include <algorithm>

#include "grundy/errors.hpp"

namespace grundy::switching {

bool TwoGraph::contains(Triple t) const {
    std::sort(t.begin(), t.end());
    return std::binary_search(triples.begin(), triples.end(), t);
}

bool TwoGraph::satisfies_parity_axiom() const {
    // dense membership cube keeps the O(n^4) scan cheap
    std::vector<char> member(static_cast<std::size_t>(n) * n * n, 0);
    auto at = [&](int a, int b, int c) -> char& {
        return member[(static_cast<std::size_t>(a) * n + b) * n + c];
    };
    for (const auto& t : triples) at(t[0], t[1], t[2]) = 1;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    const int count = at(a, b, c) + at(a, b, d) + at(a, c, d) + at(b, c, d);
                    if (count % 2 != 0) return false;
                }
            }
        }
    }
    return true;
}

Graph seidel_switch(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw InvalidInput("seidel_switch: vertex out of range");
    Graph h = g;
    const VertexSet rest = g.vertices() - s;
    for (int u : s) {
        for (int v : rest) h.toggle_edge(u, v);
    }
    return h;
}

TwoGraph odd_triples(const Graph& g) {
    TwoGraph tg;
    tg.n = g.order();
    for (int a = 0; a < tg.n; ++a) {
        for (int b = a + 1; b < tg.n; ++b) {
            for (int c = b + 1; c < tg.n; ++c) {
                const int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
                if (edges % 2 == 1) tg.triples.push_back({a, b, c});
            }
        }
    }
    return tg;
}

}  // namespace grundy::switching
