#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, one adjacency bitset per vertex.
class Graph {
public:
    static constexpr int kMaxVertices = VertexSet::kCapacity;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    int max_degree() const;
    int edge_count() const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const;

    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `s`, relabeled 0..|s|-1 in ascending order of the original ids.
Graph induced_subgraph(const Graph& g, VertexSet s);

enum class GraphFamily { Path, Cycle, Complete, Empty };

GraphFamily parse_family(const std::string& name);
Graph gen_named(GraphFamily family, int n);

}  // namespace grundy
