#include "grundy/cograph.hpp"

#include <algorithm>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy::cograph {

std::optional<DecompTree> build_cotree(const Graph& g) {
    const int n = g.order();
    DecompTree tree;
    if (n == 0) return tree;

    std::vector<VertexSet> adj(n);
    std::vector<int> node(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        node[v] = tree.add_leaf(v);
    }
    VertexSet alive = g.vertices();

    while (alive.size() > 1) {
        int tx = -1;
        int ty = -1;
        for (int x : alive) {
            for (int y : alive - VertexSet::range(x + 1)) {
                if ((adj[x] - VertexSet::single(y)) == (adj[y] - VertexSet::single(x))) {
                    tx = x;
                    ty = y;
                    break;
                }
            }
            if (tx >= 0) break;
        }
        if (tx < 0) return std::nullopt;

        const NodeKind kind = adj[tx].contains(ty) ? NodeKind::Join : NodeKind::Union;
        node[tx] = tree.add_internal(kind, node[tx], node[ty]);
        for (int z : adj[ty]) adj[z].erase(ty);
        adj[ty] = {};
        alive.erase(ty);
    }
    tree.set_root(node[alive.front()]);
    return tree;
}

namespace {

int order_for(VertexSet leaves, int n) {
    if (n >= 0) return n;
    int max_leaf = -1;
    for (int v : leaves) max_leaf = std::max(max_leaf, v);
    return max_leaf + 1;
}

void connect(Graph& g, VertexSet a, VertexSet b) {
    for (int u : a) {
        for (int v : b) g.add_edge(u, v);
    }
}

}  // namespace

Graph realize_cotree(const DecompTree& t, int n) {
    if (!t.is_cotree()) throw InvalidInput("realize_cotree: tree has crossing/parallel labels");
    const auto sets = t.leaf_sets();
    Graph g(order_for(t.leaves(), n));
    for (int id : t.postorder()) {
        const auto& node = t.node(id);
        if (node.kind == NodeKind::Join) connect(g, sets[node.left], sets[node.right]);
    }
    return g;
}

namespace {

VertexSet realize_into(const MultiwayTree& t, Graph& g) {
    if (t.kind == NodeKind::Leaf) return VertexSet::single(t.vertex);
    if (t.kind != NodeKind::Union && t.kind != NodeKind::Join) {
        throw InvalidInput("realize_cotree: tree has crossing/parallel labels");
    }
    VertexSet all;
    for (const auto& child : t.children) {
        const VertexSet s = realize_into(child, g);
        if (t.kind == NodeKind::Join) connect(g, all, s);
        all |= s;
    }
    return all;
}

VertexSet multiway_leaves(const MultiwayTree& t) {
    if (t.kind == NodeKind::Leaf) return VertexSet::single(t.vertex);
    VertexSet s;
    for (const auto& c : t.children) s |= multiway_leaves(c);
    return s;
}

}  // namespace

Graph realize_cotree(const MultiwayTree& t, int n) {
    Graph g(order_for(multiway_leaves(t), n));
    realize_into(t, g);
    return g;
}

namespace {

int sum_max_recurrence(const DecompTree& t, const char* who) {
    if (!t.is_cotree()) {
        throw InvalidInput(std::string(who) + ": tree contains crossing/parallel labels");
    }
    if (t.empty()) return 0;
    std::vector<int> value(t.size(), 0);
    for (int id : t.postorder()) {
        const auto& node = t.node(id);
        switch (node.kind) {
            case NodeKind::Leaf: value[id] = 1; break;
            case NodeKind::Union: value[id] = std::max(value[node.left], value[node.right]); break;
            case NodeKind::Join: value[id] = value[node.left] + value[node.right]; break;
            default: break;
        }
    }
    return value[t.root()];
}

int binarize_into(const MultiwayTree& t, DecompTree& out) {
    if (t.kind == NodeKind::Leaf) return out.add_leaf(t.vertex);
    if (t.children.size() < 2) {
        throw InvalidInput("binarize: internal node with fewer than two children");
    }
    int acc = binarize_into(t.children[0], out);
    for (std::size_t i = 1; i < t.children.size(); ++i) {
        const int next = binarize_into(t.children[i], out);
        acc = out.add_internal(t.kind, acc, next);
    }
    return acc;
}

}  // namespace

int cotree_chromatic(const DecompTree& t) { return sum_max_recurrence(t, "cotree_chromatic"); }

int cotree_clique(const DecompTree& t) { return sum_max_recurrence(t, "cotree_clique"); }

DecompTree binarize(const MultiwayTree& t) {
    DecompTree out;
    out.set_root(binarize_into(t, out));
    return out;
}

}  // namespace grundy::cograph
