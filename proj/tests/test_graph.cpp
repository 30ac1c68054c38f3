#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clawbound/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clawbound;

TEST_CASE("construction and edges") {
    Graph g(4);
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate collapses
    g.add_edge(2, 3);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 0));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.degree(1) == 1);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), input_error);
    REQUIRE_THROWS_AS(g.add_edge(0, 4), input_error);
    REQUIRE_THROWS_AS(Graph(-2), input_error);
}

TEST_CASE("from_edge_list and closed neighborhoods") {
    const Graph p4 = fixtures::path(4);
    REQUIRE(p4.edge_count() == 3);
    REQUIRE(closed_neighborhood(p4, 1).to_vector() == std::vector<int>{0, 1, 2});
    REQUIRE(closed_neighborhood(p4, 3).to_vector() == std::vector<int>{2, 3});
}

TEST_CASE("connectivity") {
    REQUIRE(is_connected(fixtures::path(6)));
    REQUIRE(is_connected(fixtures::cycle(5)));
    REQUIRE(is_connected(Graph(1)));
    Graph two(2);
    REQUIRE_FALSE(is_connected(two));
    Graph disc = from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_FALSE(is_connected(disc));
    REQUIRE_THROWS_AS(is_connected(Graph(0)), input_error);
}

TEST_CASE("product index map layout") {
    ProductIndexMap pm{3, 4};
    REQUIRE(pm.flat(0, 0) == 0);
    REQUIRE(pm.flat(2, 0) == 2);
    REQUIRE(pm.flat(0, 1) == 3);  // fibers are contiguous blocks
    REQUIRE(pm.unflat(7) == std::pair<int, int>{1, 2});
    for (int p = 0; p < 12; ++p) {
        auto [g, h] = pm.unflat(p);
        REQUIRE(pm.flat(g, h) == p);
    }
    REQUIRE_THROWS_AS(pm.flat(3, 0), input_error);
    REQUIRE_THROWS_AS(pm.unflat(12), input_error);
}

TEST_CASE("P2 x P2 is the 4-cycle") {
    const Graph p2 = fixtures::path(2);
    auto [prod, pm] = cartesian_product(p2, p2);
    REQUIRE(prod.vertex_count() == 4);
    REQUIRE(prod.edge_count() == 4);
    // flat: (0,0)=0 (1,0)=1 (0,1)=2 (1,1)=3
    REQUIRE(prod.has_edge(0, 1));
    REQUIRE(prod.has_edge(0, 2));
    REQUIRE(prod.has_edge(1, 3));
    REQUIRE(prod.has_edge(2, 3));
    REQUIRE_FALSE(prod.has_edge(0, 3));
    REQUIRE_FALSE(prod.has_edge(1, 2));
}

TEST_CASE("product adjacency matches the definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 5, 0.3);
        const Graph h = oracle::random_connected_graph(rng, 4, 0.4);
        auto [prod, pm] = cartesian_product(g, h);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 4; ++b)
                for (int a2 = 0; a2 < 5; ++a2)
                    for (int b2 = 0; b2 < 4; ++b2) {
                        const bool expect = (a == a2 && h.has_edge(b, b2)) ||
                                            (b == b2 && g.has_edge(a, a2));
                        REQUIRE(prod.has_edge(pm.flat(a, b), pm.flat(a2, b2)) == expect);
                    }
    }
}

TEST_CASE("product of connected factors is connected") {
    auto [prod, pm] = cartesian_product(fixtures::cycle(5), fixtures::path(3));
    REQUIRE(is_connected(prod));
    REQUIRE_THROWS_AS(cartesian_product(Graph(0), fixtures::path(2)), input_error);
}

TEST_CASE("claw detection on fixed graphs") {
    REQUIRE(is_claw_free(fixtures::path(7)));
    REQUIRE(is_claw_free(fixtures::cycle(6)));
    REQUIRE(is_claw_free(fixtures::complete(5)));

    const Graph k13 = fixtures::star(3);
    auto w = find_claw(k13);
    REQUIRE(w.has_value());
    REQUIRE(w->center == 0);
    REQUIRE(w->leaves == std::array<int, 3>{1, 2, 3});
    REQUIRE(w->to_string() == "center 0, leaves {1,2,3}");

    // spider: subdividing the star keeps the claw at its center
    const Graph spider = from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    REQUIRE_FALSE(is_claw_free(spider));
}

TEST_CASE("claw detection agrees with the brute-force oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 7, 0.35);
        REQUIRE(is_claw_free(g) == !oracle::has_claw(g));
        if (auto w = find_claw(g)) {
            // the witness really is an induced claw
            REQUIRE(g.has_edge(w->center, w->leaves[0]));
            REQUIRE(g.has_edge(w->center, w->leaves[1]));
            REQUIRE(g.has_edge(w->center, w->leaves[2]));
            REQUIRE_FALSE(g.has_edge(w->leaves[0], w->leaves[1]));
            REQUIRE_FALSE(g.has_edge(w->leaves[0], w->leaves[2]));
            REQUIRE_FALSE(g.has_edge(w->leaves[1], w->leaves[2]));
        }
    }
}

TEST_CASE("line graphs are claw-free") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph base = oracle::random_connected_graph(rng, 6, 0.4);
        const Graph lg = oracle::line_graph(base);
        REQUIRE(is_claw_free(lg));
        REQUIRE_FALSE(oracle::has_claw(lg));
    }
}
