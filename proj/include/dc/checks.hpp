#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dc/graph.hpp"

namespace dc {

enum class Property {
    tree,         // recognition + compatible tree conditions
    theorem3,     // 3-colourable <=> perfect and K4-free
    lemma3,       // induced cycles extend to wheels; no cycle edge in the tree
    lemma4,       // clique-chordal => blocks locally connected
    construction, // locally connected => greedy build-up order exists
};

std::optional<Property> property_from_name(const std::string& name);

struct CheckReport {
    bool holds = false;
    nlohmann::ordered_json details;
};

/// Runs the oracle verification behind `dc3col check --property ...`.
/// Desk-scale guards of the underlying oracles apply (errc::too_large).
CheckReport check_property(const Graph& g, Property p);

} // namespace dc
