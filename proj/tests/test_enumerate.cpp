#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "clawbound/enumerate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clawbound;

namespace {
Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (v > u) out.add_edge(perm[std::size_t(u)], perm[std::size_t(v)]);
        });
    return out;
}
}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + int(rng() % 6);
        const Graph g = oracle::random_connected_graph(rng, n, 0.4);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const CanonicalForm a = canonicalize(g);
        const CanonicalForm b = canonicalize(permuted(g, perm));
        REQUIRE(a.key == b.key);
        REQUIRE(a.graph == b.graph);
    }
}

TEST_CASE("canonicalization is idempotent and structure-preserving") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + int(rng() % 7);
        const Graph g = oracle::random_connected_graph(rng, n, 0.35);
        const CanonicalForm c = canonicalize(g);
        REQUIRE(c.graph.vertex_count() == n);
        REQUIRE(c.graph.edge_count() == g.edge_count());
        REQUIRE(canonicalize(c.graph).key == c.key);
        // degree multiset survives relabeling
        auto degrees = [](const Graph& x) {
            std::vector<int> d;
            for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
            std::sort(d.begin(), d.end());
            return d;
        };
        REQUIRE(degrees(c.graph) == degrees(g));
    }
}

TEST_CASE("distinct small graphs get distinct keys") {
    REQUIRE(canonicalize(fixtures::path(4)).key != canonicalize(fixtures::cycle(4)).key);
    REQUIRE(canonicalize(fixtures::path(4)).key != canonicalize(fixtures::star(3)).key);
    REQUIRE(canonicalize(fixtures::cycle(4)).key != canonicalize(fixtures::complete(4)).key);
}

TEST_CASE("connected counts match the exhaustive oracle") {
    const long long expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(oracle::count_connected_graphs(n) == expected[n]);
        REQUIRE(static_cast<long long>(enumerate_connected_graphs(n).size()) == expected[n]);
    }
}

TEST_CASE("enumeration output is canonical, connected, sorted, deterministic") {
    const std::vector<Graph> gs = enumerate_connected_graphs(6);
    std::uint64_t prev = 0;
    bool first = true;
    for (const Graph& g : gs) {
        REQUIRE(g.vertex_count() == 6);
        REQUIRE(is_connected(g));
        const std::uint64_t key = canonicalize(g).key;
        if (!first) REQUIRE(prev < key);  // strictly increasing: sorted + duplicate-free
        prev = key;
        first = false;
    }
    REQUIRE(enumerate_connected_graphs(6) == gs);
}

TEST_CASE("enumeration caps and errors") {
    REQUIRE_THROWS_AS(enumerate_connected_graphs(0), input_error);
    REQUIRE_THROWS_AS(enumerate_connected_graphs(8, 7), config_error);
    REQUIRE_THROWS_AS(enumerate_connected_graphs(11, 11), config_error);
    REQUIRE_THROWS_AS(canonicalize(Graph(0)), input_error);
    REQUIRE_THROWS_AS(canonicalize(Graph(12)), input_error);
}
