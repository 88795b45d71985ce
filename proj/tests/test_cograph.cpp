#include <doctest.h>

#include <numeric>
#include <set>

#include "grundy/baselines.hpp"
#include "grundy/cograph.hpp"
#include "grundy/enumerate.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/rng.hpp"
#include "support.hpp"

using namespace grundy;

namespace {

/// Random multiway cotree over the vertices in `vs`, alternating labels by depth.
MultiwayTree random_multiway(std::vector<int> vs, NodeKind kind, Rng& rng) {
    if (vs.size() == 1) return MultiwayTree::leaf(vs[0]);
    const int parts = rng.between(2, std::min<int>(4, vs.size()));
    std::vector<std::vector<int>> groups(parts);
    for (int i = 0; i < parts; ++i) groups[i].push_back(vs[i]);
    for (std::size_t i = parts; i < vs.size(); ++i) groups[rng.below(parts)].push_back(vs[i]);
    MultiwayTree t{kind, -1, {}};
    const NodeKind next = kind == NodeKind::Union ? NodeKind::Join : NodeKind::Union;
    for (auto& grp : groups) t.children.push_back(random_multiway(grp, next, rng));
    return t;
}

}  // namespace

TEST_SUITE("cograph") {
    TEST_CASE("recognition of small cases") {
        CHECK_FALSE(cograph::build_cotree(gen_named(GraphFamily::Path, 4)).has_value());
        const auto k2 = cograph::build_cotree(gen_named(GraphFamily::Complete, 2));
        REQUIRE(k2.has_value());
        CHECK(k2->to_json() ==
              nlohmann::json::parse(R"({"label":"join","children":[{"leaf":0},{"leaf":1}]})"));
        CHECK(cograph::build_cotree(Graph(1))->is_leaf(cograph::build_cotree(Graph(1))->root()));
    }

    TEST_CASE("cotree exists exactly when there is no induced P4") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const Graph g = gen_random_graph(2 + seed % 9, 0.2 + 0.1 * (seed % 7), seed);
            const auto t = cograph::build_cotree(g);
            CHECK(t.has_value() == !testing::has_induced_p4(g));
            if (t) {
                CHECK(t->is_cotree());
                CHECK(t->leaf_count() == g.order());
                CHECK(cograph::realize_cotree(*t) == g);
            }
        }
    }

    TEST_CASE("random cotrees round trip") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto r = gen_random_cograph(1 + seed % 20, 0.5, seed);
            CHECK(cograph::realize_cotree(r.cotree) == r.graph);
            const auto t = cograph::build_cotree(r.graph);
            REQUIRE(t.has_value());
            CHECK(cograph::realize_cotree(*t) == r.graph);
        }
    }

    TEST_CASE("cotree values") {
        CHECK(cograph::cotree_chromatic(*cograph::build_cotree(Graph(1))) == 1);
        const auto k3 = cograph::build_cotree(gen_named(GraphFamily::Complete, 3));
        CHECK(cograph::cotree_chromatic(*k3) == 3);
        CHECK(cograph::cotree_clique(*k3) == 3);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Graph g = gen_random_cograph(1 + seed % 12, 0.3 + 0.2 * (seed % 3), seed).graph;
            const auto t = cograph::build_cotree(g);
            REQUIRE(t.has_value());
            CHECK(cograph::cotree_chromatic(*t) == chromatic_number_bf(g));
            CHECK(cograph::cotree_clique(*t) == clique_number_bf(g));
        }
        const auto cameron_tree = k3->as_cameron_tree();
        CHECK_THROWS_AS(cograph::cotree_chromatic(cameron_tree), InvalidInput);
    }

    TEST_CASE("binarize") {
        MultiwayTree three{NodeKind::Union, -1, {MultiwayTree::leaf(0), MultiwayTree::leaf(1), MultiwayTree::leaf(2)}};
        const DecompTree b = cograph::binarize(three);
        CHECK(b.to_json() == nlohmann::json::parse(R"({"label":"union","children":[
            {"label":"union","children":[{"leaf":0},{"leaf":1}]},{"leaf":2}]})"));
        CHECK(cograph::realize_cotree(b) == cograph::realize_cotree(three));

        MultiwayTree binary{NodeKind::Join, -1, {MultiwayTree::leaf(1), MultiwayTree::leaf(0)}};
        CHECK(cograph::binarize(binary).to_json() ==
              nlohmann::json::parse(R"({"label":"join","children":[{"leaf":1},{"leaf":0}]})"));

        MultiwayTree lonely{NodeKind::Join, -1, {MultiwayTree::leaf(0)}};
        CHECK_THROWS_AS(cograph::binarize(lonely), InvalidInput);

        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const int n = 1 + seed % 15;
            std::vector<int> vs(n);
            std::iota(vs.begin(), vs.end(), 0);
            const MultiwayTree t = random_multiway(vs, seed % 2 ? NodeKind::Join : NodeKind::Union, rng);
            const DecompTree b2 = cograph::binarize(t);
            CHECK(b2.is_cotree());
            CHECK(cograph::realize_cotree(b2, n) == cograph::realize_cotree(t, n));
        }
    }

    TEST_CASE("cotree JSON round trip") {
        const auto r = gen_random_cograph(10, 0.5, 3);
        CHECK(DecompTree::from_json(r.cotree.to_json()) == r.cotree);
        CHECK_THROWS_AS(DecompTree::from_json(nlohmann::json::parse(R"({"label":"pivot","children":[]})")),
                        InvalidInput);
    }
}

TEST_SUITE("enumeration") {
    TEST_CASE("graph counts up to isomorphism") {
        const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
        for (int n = 0; n <= 7; ++n) CHECK(enumerate::all_graphs(n).size() == expected[n]);
    }

    TEST_CASE("cograph counts up to isomorphism") {
        const int expected[] = {0, 1, 2, 4, 10, 24, 66, 180, 522};
        for (int n = 1; n <= 8; ++n) CHECK(enumerate::all_cographs(n).size() == expected[n]);
    }

    TEST_CASE("enumeration matches the reference atlas") {
        std::set<std::pair<int, std::uint64_t>> reference;
        for (const auto& line : testing::read_lines("graphs_upto7.g6")) {
            const Graph g = parse_graph6(line);
            reference.emplace(g.order(), enumerate::canonical_code(g));
        }
        REQUIRE(reference.size() == 1252);
        std::set<std::pair<int, std::uint64_t>> ours;
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) ours.emplace(n, enumerate::canonical_code(g));
        }
        CHECK(ours == reference);
    }

    TEST_CASE("canonical code is a complete invariant on small graphs") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph g = gen_random_graph(6, 0.5, seed);
            std::vector<int> perm{0, 1, 2, 3, 4, 5};
            Rng rng(seed);
            for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
            CHECK(enumerate::canonical_code(testing::relabel(g, perm)) == enumerate::canonical_code(g));
            CHECK(testing::isomorphic(enumerate::from_canonical_code(6, enumerate::canonical_code(g)), g));
        }
    }
}
