#include <doctest.h>

#include "grundy/cameron.hpp"
#include "grundy/cograph.hpp"
#include "grundy/enumerate.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/switching.hpp"
#include "support.hpp"

using namespace grundy;
using cameron::Forbidden;

namespace {

Graph cycle(int n) { return gen_named(GraphFamily::Cycle, n); }
Graph path(int n) { return gen_named(GraphFamily::Path, n); }

DecompTree two_leaves(NodeKind kind) {
    DecompTree t;
    const int a = t.add_leaf(0);
    const int b = t.add_leaf(1);
    t.set_root(t.add_internal(kind, a, b));
    return t;
}

}  // namespace

TEST_SUITE("cameron") {
    TEST_CASE("recognition on named graphs") {
        CHECK_FALSE(cameron::recognize_cameron(cycle(5)).has_value());
        CHECK(cameron::recognize_cameron(cycle(6)).has_value());
        CHECK(cameron::recognize_cameron(path(5)).has_value());
        CHECK_FALSE(cameron::recognize_cameron(path(6)).has_value());
        for (int k = 7; k <= 12; ++k) CHECK_FALSE(cameron::recognize_cameron(cycle(k)).has_value());
        for (Forbidden f : {Forbidden::C5, Forbidden::Bull, Forbidden::Gem, Forbidden::CoGem}) {
            CHECK_FALSE(cameron::recognize_cameron(cameron::forbidden_graph(f)).has_value());
        }
        CHECK_THROWS_AS(cameron::recognize_cameron(Graph(0)), InvalidInput);
    }

    TEST_CASE("decomposition of P5") {
        const auto d = cameron::recognize_cameron(path(5));
        REQUIRE(d.has_value());
        // pivot 0: its neighbor 1 is the only white vertex
        CHECK(d->coloring.white_set() == VertexSet::single(1));
        CHECK(d->tree.is_cameron_tree());
        CHECK(cameron::realize_graph(d->tree, d->coloring) == path(5));
    }

    TEST_CASE("every cograph is accepted") {
        for (int n = 1; n <= 8; ++n) {
            for (const Graph& g : enumerate::all_cographs(n)) CHECK(cameron::recognize_cameron(g).has_value());
        }
    }

    TEST_CASE("realization rules") {
        const BWColoring mixed = BWColoring::from_white_set(2, VertexSet::single(1));
        CHECK(cameron::realize_graph(two_leaves(NodeKind::Crossing), mixed) == Graph(2, {{0, 1}}));
        CHECK(cameron::realize_graph(two_leaves(NodeKind::Parallel), mixed) == Graph(2));
        const BWColoring black(2, Color::Black);
        CHECK(cameron::realize_graph(two_leaves(NodeKind::Parallel), black) == Graph(2, {{0, 1}}));
        CHECK(cameron::realize_graph(two_leaves(NodeKind::Crossing), black) == Graph(2));
        CHECK_THROWS_AS(cameron::realize_graph(two_leaves(NodeKind::Join), black), InvalidInput);
        CHECK_THROWS_AS(cameron::realize_graph(two_leaves(NodeKind::Crossing), BWColoring(3, Color::Black)),
                        InvalidInput);
    }

    TEST_CASE("round trip on random Cameron graphs") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Graph g = gen_random_cameron(2 + seed % 40, 0.5, 0.5, seed).graph;
            const auto d = cameron::recognize_cameron(g);
            REQUIRE(d.has_value());
            CHECK(cameron::realize_graph(d->tree, d->coloring) == g);
        }
    }

    TEST_CASE("acceptance does not depend on the pivot") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) {
                const bool accepted = cameron::recognize_cameron(g).has_value();
                for (int x = 0; x < n; ++x) {
                    const bool via_x = cograph::build_cotree(switching::seidel_switch(g, g.neighbors(x))).has_value();
                    CHECK(via_x == accepted);
                    CHECK(cameron::recognize_cameron(g, x).has_value() == accepted);
                }
            }
        }
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Graph g = gen_random_graph(8, 0.5, seed);
            const bool accepted = cameron::recognize_cameron(g).has_value();
            for (int x = 0; x < 8; ++x) CHECK(cameron::recognize_cameron(g, x).has_value() == accepted);
        }
    }

    TEST_CASE("self-complementary class") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) {
                CHECK(cameron::recognize_cameron(g).has_value() ==
                      cameron::recognize_cameron(complement(g)).has_value());
            }
        }
    }

    TEST_CASE("forbidden graphs") {
        const Graph bull = cameron::forbidden_graph(Forbidden::Bull);
        const Graph gem = cameron::forbidden_graph(Forbidden::Gem);
        const Graph cogem = cameron::forbidden_graph(Forbidden::CoGem);
        CHECK(bull.edge_count() == 5);
        CHECK(gem.edge_count() == 7);
        CHECK(cogem.edge_count() == 3);
        // the four graphs form one switching class
        for (Forbidden f : {Forbidden::Bull, Forbidden::Gem, Forbidden::CoGem}) {
            CHECK(switching::odd_triples(cameron::forbidden_graph(f)).triples.size() ==
                  switching::odd_triples(cycle(5)).triples.size());
        }
        CHECK(testing::isomorphic(complement(bull), bull));
        CHECK(testing::isomorphic(complement(gem), cogem));
    }

    TEST_CASE("forbidden subgraph search") {
        const auto c5 = cameron::find_forbidden_subgraph(cycle(5));
        REQUIRE(c5.has_value());
        CHECK(c5->kind == Forbidden::C5);
        CHECK(c5->vertices == VertexSet::range(5));
        CHECK_FALSE(cameron::find_forbidden_subgraph(cycle(6)).has_value());
        const auto gem = cameron::find_forbidden_subgraph(cameron::forbidden_graph(Forbidden::Gem));
        REQUIRE(gem.has_value());
        CHECK(gem->kind == Forbidden::Gem);
        CHECK(gem->vertices == VertexSet::range(5));
        CHECK_THROWS_AS(cameron::find_forbidden_subgraph(Graph(15)), SizeLimitExceeded);

        // a witness lies on the induced subgraph it names
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Graph g = gen_random_graph(5 + seed % 8, 0.5, seed);
            const auto w = cameron::find_forbidden_subgraph(g);
            if (!w) continue;
            CHECK(testing::isomorphic(induced_subgraph(g, w->vertices), cameron::forbidden_graph(w->kind)));
        }
    }

    TEST_CASE("witness through the pivot") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Graph g = gen_random_graph(5 + seed % 30, 0.5, seed);
            if (cameron::recognize_cameron(g)) continue;
            const auto w = cameron::find_forbidden_subgraph_through(g, 0);
            REQUIRE(w.has_value());
            CHECK(w->vertices.contains(0));
            CHECK(testing::isomorphic(induced_subgraph(g, w->vertices), cameron::forbidden_graph(w->kind)));
        }
    }

    TEST_CASE("twin or anti-twin in every induced subgraph") {
        for (const Graph& g : enumerate::all_cographs(6)) CHECK(cameron::has_twin_or_antitwin_everywhere(g));
        CHECK_FALSE(cameron::has_twin_or_antitwin_everywhere(cycle(5)));
        CHECK(cameron::has_twin_or_antitwin_everywhere(cycle(6)));
        CHECK_THROWS_AS(cameron::has_twin_or_antitwin_everywhere(Graph(9)), SizeLimitExceeded);
    }

    TEST_CASE("three recognizers agree") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) {
                const bool rec = cameron::recognize_cameron(g).has_value();
                CHECK(rec == !cameron::find_forbidden_subgraph(g).has_value());
                CHECK(rec == cameron::has_twin_or_antitwin_everywhere(g));
            }
        }
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const Graph g = gen_random_graph(5 + seed % 6, 0.5, seed);
            const bool rec = cameron::recognize_cameron(g).has_value();
            CHECK(rec == !cameron::find_forbidden_subgraph(g).has_value());
            if (g.order() <= 8) CHECK(rec == cameron::has_twin_or_antitwin_everywhere(g));
        }
    }
}
