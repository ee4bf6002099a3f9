#pragma once

#include <utility>
#include <vector>

#include "dc/errors.hpp"

namespace dc {

using Vertex = int;

/// Simple undirected graph with dense 0-based vertex ids and sorted
/// adjacency lists. Immutable after construction.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<Vertex>> adj;

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
};

/// Builds a validated graph. Duplicate edges collapse; loops are rejected.
Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

bool is_connected(const Graph& g);

/// Connected components as vertex sets (sorted, by smallest member).
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original; // result vertex i -> original id
};

/// Induced subgraph on S, relabelled densely in sorted order of S.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> s);

/// Edge complement. Guarded to n <= 4096.
Graph complement(const Graph& g);

} // namespace dc
