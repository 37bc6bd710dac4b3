#include <doctest.h>

#include <random>
#include <set>

#include "cosmo/multigraph.hpp"
#include "oracles.hpp"

using namespace cosmo;

TEST_CASE("parse accepts the documented format") {
    const Multigraph prism = Multigraph::parse("nodes 2\n0 1\n0 1\n");
    CHECK(prism.node_count() == 2);
    CHECK(prism.edge_count() == 2);
    CHECK(prism.edge(0) == Edge{0, 1});
    CHECK(prism.edge(1) == Edge{0, 1});

    const Multigraph loop = Multigraph::parse("nodes 1\n0 0\n");
    CHECK(loop.edge_count() == 1);
    CHECK(loop.is_loop(0));

    const Multigraph path = Multigraph::parse("# a comment\n\nnodes 3\n0 1\n1 2\n");
    CHECK(path.node_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK_FALSE(path.is_loop(0));
}

TEST_CASE("parse reports the offending line") {
    CHECK_THROWS_WITH_AS(Multigraph::parse("0 1\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(Multigraph::parse("nodes 2\n0 five\n"), doctest::Contains("line 2"),
                         parse_error);
    CHECK_THROWS_WITH_AS(Multigraph::parse("nodes 2\n0 1\n1 2\n"), doctest::Contains("line 3"),
                         parse_error);
    CHECK_THROWS_WITH_AS(Multigraph::parse("# only a comment\n"), doctest::Contains("header"),
                         parse_error);
    CHECK_THROWS_AS(Multigraph::parse("nodes 2\n0 1 3\n"), parse_error);
}

TEST_CASE("acyclicity on the small fixtures") {
    const Multigraph parallel = oracle::parallel_graph(2);
    CHECK_FALSE(parallel.is_acyclic(0b11));
    CHECK(parallel.is_acyclic(0b01));

    const Multigraph loop = oracle::loops_graph(1);
    CHECK_FALSE(loop.is_acyclic(0b1));

    const Multigraph triangle = oracle::cycle_graph(3);
    CHECK(triangle.is_acyclic(0b011));
    CHECK(triangle.is_acyclic(0b101));
    CHECK(triangle.is_acyclic(0b110));
    CHECK_FALSE(triangle.is_acyclic(0b111));
}

TEST_CASE("acyclic subset enumeration is exact and ascending") {
    CHECK(acyclic_subsets(oracle::parallel_graph(2)) == std::vector<EdgeSubset>{0, 1, 2});
    CHECK(acyclic_subsets(oracle::loops_graph(1)) == std::vector<EdgeSubset>{0});
    CHECK(acyclic_subsets(oracle::cycle_graph(3)).size() == 7);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 5, 8);
        const auto fast = acyclic_subsets(g);
        CHECK(fast == oracle::brute_acyclic_subsets(g));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
}

TEST_CASE("bridge-free subsets on the fixtures") {
    CHECK(bridge_free_subsets(oracle::cycle_graph(3)) == std::vector<EdgeSubset>{0, 0b111});
    CHECK(bridge_free_subsets(oracle::parallel_graph(3)) ==
          std::vector<EdgeSubset>{0, 0b011, 0b101, 0b110, 0b111});
    CHECK(bridge_free_subsets(oracle::single_edge()) == std::vector<EdgeSubset>{0});
}

TEST_CASE("bridge-free enumeration closed under the per-edge cycle test") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 5, 8);
        std::set<EdgeSubset> listed;
        for (const EdgeSubset h : bridge_free_subsets(g)) {
            listed.insert(h);
            for (int e = 0; e < g.edge_count(); ++e) {
                if (!(h >> e & 1) || g.is_loop(e)) continue;
                // every non-loop member edge must lie on a cycle of (V, h)
                const EdgeSubset without = h & ~(EdgeSubset{1} << e);
                CHECK(oracle::bfs_components(g, without) == oracle::bfs_components(g, h));
            }
        }
        // and everything not listed has a bridge
        for (EdgeSubset h = 0;; ++h) {
            if (!listed.count(h)) CHECK(subset_has_bridge(g, h));
            if (h == g.full_subset()) break;
        }
    }
}

TEST_CASE("bridges and loops") {
    const Multigraph path = oracle::path_graph(2);
    CHECK(path.is_bridge(0));
    CHECK(path.is_bridge(1));

    const Multigraph triangle = oracle::cycle_graph(3);
    for (int e = 0; e < 3; ++e) CHECK_FALSE(triangle.is_bridge(e));

    const Multigraph loop = oracle::loops_graph(1);
    CHECK(loop.is_loop(0));
    CHECK_FALSE(loop.is_bridge(0));
}

TEST_CASE("deletion and contraction") {
    const Multigraph triangle = oracle::cycle_graph(3);
    const Multigraph contracted = triangle.contract_edge(0);
    CHECK(contracted.node_count() == 2);
    CHECK(contracted.edge_count() == 2);
    CHECK_FALSE(contracted.is_loop(0));
    CHECK_FALSE(contracted.is_loop(1));
    CHECK_FALSE(contracted.is_acyclic(0b11));  // the surviving pair is parallel

    const Multigraph parallel = oracle::parallel_graph(2);
    const Multigraph one_loop = parallel.contract_edge(0);
    CHECK(one_loop.node_count() == 1);
    CHECK(one_loop.edge_count() == 1);
    CHECK(one_loop.is_loop(0));

    const Multigraph path = oracle::path_graph(2);
    const Multigraph cut = path.delete_edge(1);
    CHECK(cut.node_count() == 3);  // the isolated node survives
    CHECK(cut.edge_count() == 1);

    CHECK_THROWS_AS(oracle::loops_graph(1).contract_edge(0), std::invalid_argument);
}

TEST_CASE("contraction preserves edge order and renumbers densely") {
    // Edges: 0:(0,2) 1:(1,3) 2:(2,3) 3:(0,3); contract edge 2 (merge 2,3).
    const Multigraph g(4, {{0, 2}, {1, 3}, {2, 3}, {0, 3}});
    const Multigraph c = g.contract_edge(2);
    CHECK(c.node_count() == 3);
    CHECK(c.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {0, 2}});
}

TEST_CASE("component counts and rank") {
    const Multigraph triangle = oracle::cycle_graph(3);
    CHECK(triangle.component_count(0) == 3);
    CHECK(triangle.rank() == 2);

    const Multigraph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(k22.rank() == 3);

    const Multigraph edgeless(5, {});
    CHECK(edgeless.component_count() == 5);
    CHECK(edgeless.rank() == 0);
}

TEST_CASE("the acyclicity-rank identity holds on random subsets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 6, 10);
        std::uniform_int_distribution<EdgeSubset> mask(0, g.full_subset());
        for (int i = 0; i < 20; ++i) {
            const EdgeSubset h = g.edge_count() == 0 ? 0 : mask(rng);
            CHECK(g.is_acyclic(h) == (subset_size(h) == g.node_count() - g.component_count(h)));
        }
    }
}

TEST_CASE("canonical keys") {
    const Multigraph a = Multigraph::parse("nodes 3\n0 1\n1 2\n");
    const Multigraph b = Multigraph::parse("nodes 3\n1 2\n0 1\n");
    CHECK(a.canonical_key() == b.canonical_key());

    CHECK(oracle::cycle_graph(3).canonical_key() != oracle::path_graph(3).canonical_key());

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 5, 8);
        std::vector<Edge> shuffled = g.edges();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const Multigraph h(g.node_count(), shuffled);
        CHECK(g.canonical_key() == h.canonical_key());
    }
}
