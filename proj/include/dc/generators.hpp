#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dc/graph.hpp"
#include "dc/recognition.hpp"
#include "dc/rng.hpp"

namespace dc {

enum class Family {
    dually_chordal,
    k4_free_dually_chordal,
    locally_connected_blocks,
    connected_random,
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

/// Deterministic generator request: identical specs yield identical graphs.
struct GenSpec {
    int n = 0;
    double density = 0.0; // in [0, 1]
    std::uint64_t seed = 0;
    Family family = Family::connected_random;
};

Graph generate(const GenSpec& spec);

/// New vertex adjacent to everything; the result always admits a maximum
/// neighbourhood ordering.
Graph add_universal_vertex(const Graph& g);

/// The universal-vertex gadget, named as the reduction it implements:
/// g is 3-colourable iff the result is 4-colourable.
Graph reduce_3col_to_4col(const Graph& g);

struct GeneratedWithTree {
    Graph graph;
    CompatibleTree tree; // witness tree: every edge's tree-path interior is saturated
};

/// Random spanning tree, then repeatedly add non-edges whose whole tree-path
/// interior is already adjacent to both endpoints (coin per candidate).
/// The tree therefore satisfies the path-adjacency condition by construction.
/// Guarded to n <= 4096; emitted graphs up to n = 200 are re-verified.
Graph gen_dually_chordal(const GenSpec& spec);
GeneratedWithTree gen_dually_chordal_with_tree(const GenSpec& spec);

/// Same process, skipping any edge whose insertion would complete a K4.
Graph gen_k4_free_dually_chordal(const GenSpec& spec);
GeneratedWithTree gen_k4_free_dually_chordal_with_tree(const GenSpec& spec);

/// Blocks grown from an edge by attaching each new vertex to both endpoints
/// of an existing block edge (plus optional common-neighbour chords), glued
/// at random articulation vertices into a block tree. Requires n >= 2.
Graph gen_locally_connected_blocks(const GenSpec& spec);

/// Random spanning tree plus density-driven extra edges.
Graph gen_connected_random(const GenSpec& spec);

/// Single locally connected block on n >= 2 vertices (building block of
/// gen_locally_connected_blocks, exposed for property tests).
Graph grow_locally_connected_block(int n, double density, SplitMix64& attach_rng,
                                   SplitMix64& chord_rng);

} // namespace dc
