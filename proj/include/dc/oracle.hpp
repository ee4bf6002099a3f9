#pragma once

#include <optional>
#include <vector>

#include "dc/coloring_types.hpp"
#include "dc/graph.hpp"
#include "dc/recognition.hpp"

namespace dc {

/// Exact k-colouring by backtracking; any proper colouring or absent.
/// Guarded to n <= 20.
std::optional<Coloring> brute_force_k_colorable(const Graph& g, int k);

/// Smallest k with a proper k-colouring. Guarded to n <= 14.
int chromatic_number(const Graph& g);

/// All maximal cliques (pivoted Bron-Kerbosch), each sorted ascending,
/// the list sorted lexicographically. Guarded to n <= 64.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

struct CliqueGraph {
    Graph graph;                             // one vertex per maximal clique
    std::vector<std::vector<Vertex>> cliques; // clique i <-> graph vertex i
};

/// Intersection graph of the maximal cliques.
CliqueGraph clique_graph(const Graph& g);

/// Chordality via maximum cardinality search + elimination-order check.
bool is_chordal(const Graph& g);

/// True iff the clique graph is chordal.
bool is_clique_chordal(const Graph& g);

enum class CycleKind { hole, antihole };

struct CycleWitness {
    std::vector<Vertex> vertices; // cyclic order, canonical start
    CycleKind kind = CycleKind::hole;
    std::optional<Vertex> hub;
};

/// All chordless cycles of length >= min_len (min_len >= 4), canonicalised:
/// smallest vertex first, then its smaller cycle-neighbour. Guarded to n <= 14.
std::vector<CycleWitness> find_chordless_cycles(const Graph& g, int min_len);

struct WheelHubResult {
    std::optional<Vertex> hub;
    bool tree_edge_check = false; // true iff no cycle edge lies in the tree
};

/// For an induced cycle in a K4-free graph with a verified compatible tree:
/// a vertex adjacent to the whole cycle plus the tree-edge check.
/// Raises errc::precondition when the graph has a K4 or the tree fails
/// the path-adjacency condition.
WheelHubResult wheel_hub(const Graph& g, const CycleWitness& cycle, const CompatibleTree& tree);

/// Perfection via odd-hole search in the graph and its complement.
/// Guarded to n <= 14.
bool is_perfect_desk(const Graph& g);

} // namespace dc
