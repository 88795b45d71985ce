#include "grundy/graph.hpp"

#include <algorithm>

#include "grundy/errors.hpp"

namespace grundy {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw InvalidInput("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxVertices) + "]");
    }
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw InvalidInput("vertex out of range in pair (" + std::to_string(u) + ", " +
                           std::to_string(v) + ")");
    }
    if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] ^= VertexSet::single(v);
    adj_[v] ^= VertexSet::single(u);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) h.add_edge(u, v);
        }
    }
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) {
        throw InvalidInput("induced_subgraph: vertex set not contained in V(g)");
    }
    const std::vector<int> keep = s.to_vector();
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

GraphFamily parse_family(const std::string& name) {
    if (name == "path") return GraphFamily::Path;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "empty") return GraphFamily::Empty;
    throw InvalidInput("unknown graph family '" + name + "'");
}

Graph gen_named(GraphFamily family, int n) {
    if (n < 0) throw InvalidInput("graph order must be nonnegative");
    Graph g(n);
    switch (family) {
        case GraphFamily::Path:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            break;
        case GraphFamily::Cycle:
            if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            break;
        case GraphFamily::Complete:
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            }
            break;
        case GraphFamily::Empty:
            break;
    }
    return g;
}

}  // namespace grundy
