#include "grundy/generators.hpp"

#include <numeric>
#include <vector>

#include "grundy/cograph.hpp"
#include "grundy/errors.hpp"
#include "grundy/rng.hpp"
#include "grundy/switching.hpp"

namespace grundy {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(std::string(name) + " must lie in [0, 1]");
}

int random_cotree(Rng& rng, const std::vector<int>& order, int lo, int hi, double p_join,
                  DecompTree& tree) {
    if (hi - lo == 1) return tree.add_leaf(order[lo]);
    const int split = rng.between(lo + 1, hi - 1);
    const NodeKind kind = rng.chance(p_join) ? NodeKind::Join : NodeKind::Union;
    const int left = random_cotree(rng, order, lo, split, p_join, tree);
    const int right = random_cotree(rng, order, split, hi, p_join, tree);
    return tree.add_internal(kind, left, right);
}

DecompTree shuffled_cotree(Rng& rng, int n, double p_join) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    DecompTree tree;
    tree.set_root(random_cotree(rng, order, 0, n, p_join, tree));
    return tree;
}

}  // namespace

RandomCameron gen_random_cameron(int n, double p_join, double p_white, std::uint64_t seed) {
    if (n < 1 || n > Graph::kMaxVertices) throw InvalidInput("gen_random_cameron: n out of range");
    check_probability(p_join, "p_join");
    check_probability(p_white, "p_white");

    Rng rng(seed);
    DecompTree cotree = shuffled_cotree(rng, n, p_join);
    const Graph cograph = cograph::realize_cotree(cotree, n);
    VertexSet white;
    for (int v = 0; v < n; ++v) {
        if (rng.chance(p_white)) white.insert(v);
    }
    return {switching::seidel_switch(cograph, white), BWColoring::from_white_set(n, white),
            std::move(cotree)};
}

RandomCameron gen_random_cograph(int n, double p_join, std::uint64_t seed) {
    return gen_random_cameron(n, p_join, 0.0, seed);
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
    check_probability(p, "p");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace grundy
