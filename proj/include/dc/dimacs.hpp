#pragma once

#include <string>
#include <string_view>

#include "dc/graph.hpp"

namespace dc {

/// DIMACS colouring format: optional "c ..." comment lines, one
/// "p edge <n> <m>" header, then "e <u> <v>" lines with 1-based labels.
/// The header's m is advisory; actual edges are counted.
Graph parse_dimacs(std::string_view text);

Graph read_dimacs_file(const std::string& path);

std::string write_dimacs(const Graph& g);

void write_dimacs_file(const Graph& g, const std::string& path);

} // namespace dc
