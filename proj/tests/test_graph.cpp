#include <doctest.h>

#include "dc/graph.hpp"
#include "dc/rng.hpp"
#include "support/graphs.hpp"

#include <algorithm>

using namespace dc;
using namespace dc::testsupport;

namespace {

Graph random_graph(int n, double density, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < density) e.emplace_back(i, j);
    return from_edges(n, e);
}

bool adjacency_symmetric(const Graph& g) {
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u]) {
            if (v == u) return false;
            if (!std::binary_search(g.adj[v].begin(), g.adj[v].end(), u)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("from_edges builds the triangle") {
    Graph g = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(g.n == 3);
    CHECK(g.m == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 0));
}

TEST_CASE("from_edges collapses duplicate edges") {
    Graph g = from_edges(2, {{0, 1}, {1, 0}});
    CHECK(g.m == 1);
    CHECK(g.adj[0] == std::vector<Vertex>{1});
}

TEST_CASE("from_edges rejects loops and out-of-range endpoints") {
    CHECK_THROWS_WITH_AS(from_edges(1, {{0, 0}}), doctest::Contains("loop"), Error);
    try {
        from_edges(2, {{0, 2}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::vertex_range);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(3)));
    CHECK(is_connected(path_graph(4)));
    CHECK(!is_connected(from_edges(2, {})));
    CHECK(is_connected(from_edges(1, {})));
}

TEST_CASE("induced subgraph relabels densely") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {0, 2, 3});
    CHECK(sub.graph.n == 3);
    CHECK(sub.graph.m == 3);
    CHECK(sub.original == std::vector<Vertex>{0, 2, 3});

    // three consecutive vertices of a 5-cycle give a 2-edge path
    Graph c5 = cycle_graph(5);
    auto p = induced_subgraph(c5, {0, 1, 2});
    CHECK(p.graph.m == 2);
    CHECK(p.graph.has_edge(0, 1));
    CHECK(p.graph.has_edge(1, 2));
    CHECK(!p.graph.has_edge(0, 2));
}

TEST_CASE("induced subgraph on the full vertex set is the identity copy") {
    Graph g = random_graph(9, 0.4, 11);
    std::vector<Vertex> all(9);
    for (int i = 0; i < 9; ++i) all[i] = i;
    auto sub = induced_subgraph(g, all);
    CHECK(sub.graph.adj == g.adj);
}

TEST_CASE("complement of K4 has no edges; complement is an involution") {
    CHECK(complement(complete_graph(4)).m == 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(8, 0.5, seed);
        CHECK(complement(complement(g)).adj == g.adj);
    }
}

TEST_CASE("complement of the 5-cycle is again a 5-cycle") {
    Graph cc = complement(cycle_graph(5));
    CHECK(cc.n == 5);
    CHECK(cc.m == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    CHECK(is_connected(cc)); // a connected 2-regular graph on 5 vertices is C5
}

TEST_CASE("complement guard") {
    Graph big = from_edges(5000, {});
    CHECK_THROWS_AS((void)complement(big), Error);
}

TEST_CASE("adjacency stays sorted and symmetric after constructors") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(10, 0.3, 100 + seed);
        CHECK(adjacency_symmetric(g));
        CHECK(adjacency_symmetric(complement(g)));
        CHECK(adjacency_symmetric(induced_subgraph(g, {0, 1, 2, 3, 4}).graph));
        for (Vertex v = 0; v < g.n; ++v)
            CHECK(std::is_sorted(g.adj[v].begin(), g.adj[v].end()));
    }
}

TEST_CASE("edge list is lexicographically sorted with u < v") {
    Graph g = random_graph(9, 0.5, 42);
    auto edges = g.edges();
    CHECK(static_cast<long long>(edges.size()) == g.m);
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    for (auto [u, v] : edges) CHECK(u < v);
}

TEST_CASE("connected components") {
    Graph g = from_edges(5, {{0, 1}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 1});
    CHECK(comps[1] == std::vector<Vertex>{2});
    CHECK(comps[2] == std::vector<Vertex>{3, 4});
}
