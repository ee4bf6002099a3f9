#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dc/graph.hpp"

namespace dc {

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks; // vertex sets, sorted; ordered by smallest edge
    std::vector<Vertex> articulation;        // sorted
    std::vector<std::pair<Vertex, Vertex>> edges; // canonical edge list of the graph
    std::vector<int> block_of_edge;               // aligned with `edges`
};

/// Biconnected components via DFS lowpoints. Requires a connected graph.
BlockDecomposition blocks(const Graph& g);

struct LocalConnectivity {
    bool ok = false;
    std::optional<Vertex> witness; // a violating vertex when !ok
};

/// True iff every open neighbourhood is non-empty and connected.
LocalConnectivity is_locally_connected(const Graph& g);

/// True iff every block with >= 3 vertices is locally connected as an
/// induced subgraph (single-edge blocks pass). Requires a connected graph.
bool blocks_locally_connected(const Graph& g);

/// Any 4-clique, or absent.
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);

struct ConstructionOrder {
    std::vector<Vertex> order;                     // starts with an edge
    std::vector<std::pair<Vertex, Vertex>> attach; // witness pair for order[i+2]
};

/// Greedy build-up order: start with the smallest edge, repeatedly place a
/// vertex that has two mutually adjacent placed neighbours. Absent when the
/// greedy stalls. Requires a connected graph with n >= 2.
std::optional<ConstructionOrder> construction_order(const Graph& g);

bool validate_construction_order(const Graph& g, const ConstructionOrder& co);

} // namespace dc
