#pragma once

#include <optional>
#include <vector>

#include "dc/graph.hpp"

namespace dc {

/// Elimination order with per-position maximum-neighbour witnesses.
/// Position i eliminates order[i]; witness[i] is its maximum neighbour in
/// the residual graph on {order[i], ..., order[n-1]}.
struct MaxNeighbourhoodOrdering {
    std::vector<Vertex> order;
    std::vector<Vertex> witness;
};

/// Rooted spanning tree; parent[root] == -1.
struct CompatibleTree {
    std::vector<Vertex> parent;
    Vertex root = -1;
};

/// Maximum neighbour of v restricted to alive vertices: some u in N[v] with
/// N[w] subset of N[u] for every w in N[v] (all neighbourhoods residual).
/// Proper neighbours are preferred over v itself; ties go to the candidate
/// with the larger residual closed neighbourhood, then the smaller id.
std::optional<Vertex> maximum_neighbour(const Graph& g, Vertex v, const std::vector<char>& alive);

/// Greedy elimination. Returns a full ordering or absent if at some step no
/// residual vertex has a maximum neighbour. Raises errc::disconnected.
std::optional<MaxNeighbourhoodOrdering> find_mno(const Graph& g);

/// Search over all elimination sequences (shared-prefix pruning with
/// residual-set memoisation). Guarded to n <= 8.
std::optional<MaxNeighbourhoodOrdering> exhaustive_mno_search(const Graph& g);

/// Checks the ordering invariant directly against the definition.
bool is_valid_mno(const Graph& g, const MaxNeighbourhoodOrdering& mno);

/// Builds a spanning tree satisfying the path-adjacency condition: for every
/// edge uv, all interior vertices of the tree path are adjacent to both u
/// and v. Attaches vertices in reverse elimination order with backtracking
/// over parent choices; falls back to spanning-tree enumeration for n <= 12.
/// Raises errc::no_compatible_tree when every route fails.
CompatibleTree build_compatible_tree(const Graph& g, const MaxNeighbourhoodOrdering& mno);

/// Interior vertices of the unique u-v tree path, endpoints excluded.
std::vector<Vertex> tree_path_interior(const CompatibleTree& t, Vertex u, Vertex v);

struct TreeReport {
    bool cond_path_adjacency = false;  // every edge's interior adjacent to both endpoints
    bool cond_clique_subtrees = false; // every maximal clique induces a connected tree part
    bool clique_path = false;          // every edge's closed tree path is a clique
    int max_edge_path_card = 0;        // max |P_T[u,v]| over edges uv
};

/// Verifies a spanning tree against both characterising conditions and the
/// closed-path clique property. `cliques` must be all maximal cliques of g.
TreeReport verify_compatible_tree(const Graph& g, const CompatibleTree& t,
                                  const std::vector<std::vector<Vertex>>& cliques);

/// Just the path-adjacency condition (cheap, no clique enumeration needed).
bool verify_path_condition(const Graph& g, const CompatibleTree& t);

} // namespace dc
