#pragma once

#include <functional>
#include <optional>

#include "dc/coloring_types.hpp"
#include "dc/graph.hpp"
#include "dc/rng.hpp"

namespace dc {

enum class ThreeColorVerdict { colored, not_three_colorable, not_applicable };

struct ThreeColorResult {
    ThreeColorVerdict verdict = ThreeColorVerdict::not_three_colorable;
    std::optional<Coloring> coloring;
};

/// Observer for the selection step: (vertex, |avail|, min |avail| over all
/// uncoloured vertices at that moment). Test hook; null by default.
using PopObserver = std::function<void(Vertex, int, int)>;

/// Bucket-queue 3-colouring. Every vertex starts with available colours
/// {1,2,3}; the vertex with the fewest available colours is selected,
/// receives its smallest available colour, and that colour is withdrawn
/// from all uncoloured neighbours. Runs in O(n + m).
///
/// For inputs whose blocks are locally connected this succeeds exactly when
/// the graph is 3-colourable; on other inputs a returned colouring is still
/// always proper, but a negative answer may be spurious.
///
/// `tie_rng`, when set, replaces the FIFO discipline inside a bucket by a
/// uniformly random pick (test hook for tie-break independence).
/// Raises errc::disconnected.
ThreeColorResult three_color(const Graph& g, SplitMix64* tie_rng = nullptr,
                             const PopObserver& observer = {});

/// Checks that all blocks are locally connected before colouring;
/// returns not_applicable otherwise.
ThreeColorResult three_color_checked(const Graph& g);

/// True iff the colouring is total, proper, and uses colours in [1, k].
bool validate_coloring(const Graph& g, const Coloring& c, int k);

/// BFS bipartition, or absent when an odd cycle exists.
std::optional<Coloring> two_color(const Graph& g);

} // namespace dc
