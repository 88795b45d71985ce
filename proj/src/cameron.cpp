#include "grundy/cameron.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "grundy/cograph.hpp"
#include "grundy/switching.hpp"

namespace grundy::cameron {

std::optional<Decomposition> recognize_cameron(const Graph& g, int pivot) {
    if (g.order() == 0) throw InvalidInput("recognize_cameron: empty graph");
    if (pivot < 0 || pivot >= g.order()) throw InvalidInput("recognize_cameron: pivot out of range");

    const VertexSet white = g.neighbors(pivot);
    const Graph switched = switching::seidel_switch(g, white);
    auto cotree = cograph::build_cotree(switched);
    if (!cotree) return std::nullopt;
    return Decomposition{BWColoring::from_white_set(g.order(), white), cotree->as_cameron_tree()};
}

Graph realize_graph(const DecompTree& t, const BWColoring& c) {
    if (!t.is_cameron_tree()) throw InvalidInput("realize_graph: tree has union/join labels");
    if (t.leaves() != VertexSet::range(c.size()) || t.leaf_count() != c.size()) {
        throw InvalidInput("realize_graph: leaves do not match the coloring's vertex set");
    }
    const auto sets = t.leaf_sets();
    const VertexSet white = c.white_set();
    const VertexSet black = c.black_set();
    Graph g(c.size());
    auto connect = [&](VertexSet a, VertexSet b) {
        for (int u : a) {
            for (int v : b) g.add_edge(u, v);
        }
    };
    for (int id : t.postorder()) {
        const auto& node = t.node(id);
        if (node.kind == NodeKind::Leaf) continue;
        const VertexSet l = sets[node.left];
        const VertexSet r = sets[node.right];
        if (node.kind == NodeKind::Parallel) {
            connect(l & black, r & black);
            connect(l & white, r & white);
        } else {
            connect(l & black, r & white);
            connect(l & white, r & black);
        }
    }
    return g;
}

const char* to_string(Forbidden f) {
    switch (f) {
        case Forbidden::C5: return "C5";
        case Forbidden::Bull: return "bull";
        case Forbidden::Gem: return "gem";
        case Forbidden::CoGem: return "co-gem";
    }
    return "?";
}

Graph forbidden_graph(Forbidden f) {
    switch (f) {
        case Forbidden::C5:
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        case Forbidden::Bull:
            // triangle 0-1-2 with horns on 0 and 1
            return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
        case Forbidden::Gem:
            // P4 plus a dominating vertex
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
        case Forbidden::CoGem:
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}});
    }
    return Graph(5);
}

namespace {

constexpr int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    // index of (i, j) among the 10 pairs of {0..4} in lexicographic order
    constexpr std::array<int, 5> base{0, 4, 7, 9, 10};
    return base[i] + (j - i - 1);
}

int code_of(const Graph& g, const std::array<int, 5>& vs) {
    int code = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            if (g.adjacent(vs[i], vs[j])) code |= 1 << pair_bit(i, j);
        }
    }
    return code;
}

/// Maps each 10-bit adjacency code on 5 labeled vertices to the forbidden graph
/// it is isomorphic to, or -1. Filled by trying all 120 relabelings.
const std::array<int, 1024>& forbidden_table() {
    static const std::array<int, 1024> table = [] {
        std::array<int, 1024> t;
        t.fill(-1);
        for (Forbidden f : {Forbidden::C5, Forbidden::Bull, Forbidden::Gem, Forbidden::CoGem}) {
            const Graph h = forbidden_graph(f);
            std::array<int, 5> perm{0, 1, 2, 3, 4};
            do {
                t[code_of(h, perm)] = static_cast<int>(f);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return t;
    }();
    return table;
}

}  // namespace

std::optional<ForbiddenSubgraph> find_forbidden_subgraph(const Graph& g) {
    const int n = g.order();
    if (n > kForbiddenScanLimit) {
        throw SizeLimitExceeded("find_forbidden_subgraph", n, kForbiddenScanLimit);
    }
    const auto& table = forbidden_table();
    std::array<int, 5> vs{};
    for (vs[0] = 0; vs[0] < n; ++vs[0]) {
        for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1]) {
            for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2]) {
                for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3]) {
                    for (vs[4] = vs[3] + 1; vs[4] < n; ++vs[4]) {
                        const int hit = table[code_of(g, vs)];
                        if (hit >= 0) {
                            VertexSet s;
                            for (int v : vs) s.insert(v);
                            return ForbiddenSubgraph{static_cast<Forbidden>(hit), s};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ForbiddenSubgraph> find_forbidden_subgraph_through(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw InvalidInput("vertex out of range");
    const auto& table = forbidden_table();
    std::vector<int> others;
    for (int u = 0; u < n; ++u) {
        if (u != v) others.push_back(u);
    }
    const int m = static_cast<int>(others.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                for (int d = c + 1; d < m; ++d) {
                    std::array<int, 5> vs{v, others[a], others[b], others[c], others[d]};
                    std::sort(vs.begin(), vs.end());
                    const int hit = table[code_of(g, vs)];
                    if (hit >= 0) {
                        VertexSet s;
                        for (int u : vs) s.insert(u);
                        return ForbiddenSubgraph{static_cast<Forbidden>(hit), s};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

bool has_twin_or_antitwin(const Graph& g, VertexSet s) {
    for (int x : s) {
        for (int y : s - VertexSet::range(x + 1)) {
            const VertexSet others = s - VertexSet::single(x) - VertexSet::single(y);
            const VertexSet nx = g.neighbors(x) & others;
            const VertexSet ny = g.neighbors(y) & others;
            if (nx == ny) return true;
            if ((nx ^ ny) == others) return true;
        }
    }
    return false;
}

}  // namespace

bool has_twin_or_antitwin_everywhere(const Graph& g) {
    const int n = g.order();
    if (n > kTwinScanLimit) throw SizeLimitExceeded("has_twin_or_antitwin_everywhere", n, kTwinScanLimit);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (s.size() >= 2 && !has_twin_or_antitwin(g, s)) return false;
    }
    return true;
}

namespace {

std::string describe(const std::optional<ForbiddenSubgraph>& w) {
    std::string msg = "graph is not a Cameron graph";
    if (w) {
        msg += " (induced ";
        msg += to_string(w->kind);
        msg += " on {";
        bool first = true;
        for (int v : w->vertices) {
            if (!first) msg += ",";
            msg += std::to_string(v);
            first = false;
        }
        msg += "})";
    }
    return msg;
}

}  // namespace

NotCameron::NotCameron(std::optional<ForbiddenSubgraph> witness)
    : Error(describe(witness)), witness_(std::move(witness)) {}

}  // namespace grundy::cameron
