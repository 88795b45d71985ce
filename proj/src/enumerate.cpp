#include "grundy/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "grundy/cograph.hpp"
#include "grundy/errors.hpp"

namespace grundy::enumerate {

namespace {

std::uint64_t code_for_order(const Graph& g, const std::vector<int>& order) {
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
    }
    return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalLimit) throw SizeLimitExceeded("canonical_code", n, kCanonicalLimit);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // blocks of equal degree are permuted independently
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    for (auto [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);

    std::uint64_t best = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            best = std::max(best, code_for_order(g, order));
            return;
        }
        auto [lo, hi] = blocks[b];
        do {
            rec(b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

Graph from_canonical_code(int n, std::uint64_t code) {
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            --bit;
            if ((code >> bit) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw InvalidInput("all_graphs: negative order");
    if (n > kAllGraphsLimit) throw SizeLimitExceeded("all_graphs", n, kAllGraphsLimit);
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::uint64_t> codes;
        for (const Graph& g : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                Graph h(k);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u : VertexSet(mask)) h.add_edge(u, k - 1);
                codes.insert(canonical_code(h));
            }
        }
        level.clear();
        for (std::uint64_t c : codes) level.push_back(from_canonical_code(k, c));
    }
    return level;
}

namespace {

struct Flat {
    NodeKind kind;
    std::vector<Flat> children;
};

Flat flatten(const DecompTree& t, int id) {
    const auto& node = t.node(id);
    if (node.kind == NodeKind::Leaf) return {NodeKind::Leaf, {}};
    Flat out{node.kind, {}};
    for (int child : {node.left, node.right}) {
        Flat f = flatten(t, child);
        if (f.kind == node.kind) {
            for (auto& c : f.children) out.children.push_back(std::move(c));
        } else {
            out.children.push_back(std::move(f));
        }
    }
    return out;
}

std::string render(const Flat& f) {
    if (f.kind == NodeKind::Leaf) return "v";
    std::vector<std::string> parts;
    for (const auto& c : f.children) parts.push_back(render(c));
    std::sort(parts.begin(), parts.end());
    std::string s = f.kind == NodeKind::Join ? "J(" : "U(";
    for (const auto& p : parts) s += p;
    return s + ")";
}

}  // namespace

std::string cograph_signature(const Graph& g) {
    auto tree = cograph::build_cotree(g);
    if (!tree) throw InvalidInput("cograph_signature: graph has an induced P4");
    if (tree->empty()) return "";
    return render(flatten(*tree, tree->root()));
}

std::vector<Graph> all_cographs(int n) {
    if (n < 1) throw InvalidInput("all_cographs: order must be positive");
    if (n > kAllCographsLimit) throw SizeLimitExceeded("all_cographs", n, kAllCographsLimit);
    std::vector<std::vector<Graph>> by_order(n + 1);
    by_order[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> found;
        for (int a = 1; a <= k / 2; ++a) {
            for (const Graph& x : by_order[a]) {
                for (const Graph& y : by_order[k - a]) {
                    for (bool join : {false, true}) {
                        Graph h(k);
                        for (auto [u, v] : x.edges()) h.add_edge(u, v);
                        for (auto [u, v] : y.edges()) h.add_edge(u + a, v + a);
                        if (join) {
                            for (int u = 0; u < a; ++u) {
                                for (int v = a; v < k; ++v) h.add_edge(u, v);
                            }
                        }
                        found.try_emplace(cograph_signature(h), h);
                    }
                }
            }
        }
        for (auto& [sig, g] : found) by_order[k].push_back(g);
    }
    return by_order[n];
}

}  // namespace grundy::enumerate
