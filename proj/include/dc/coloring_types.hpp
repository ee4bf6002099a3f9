#pragma once

#include <vector>

#include "dc/graph.hpp"

namespace dc {

/// Total vertex colouring with colour values 1..k.
struct Coloring {
    std::vector<int> color; // per vertex, 1-based colour value
    int k = 0;              // number of distinct colours used
};

inline Coloring make_coloring(std::vector<int> colors) {
    Coloring c;
    c.color = std::move(colors);
    std::vector<char> seen;
    for (int x : c.color) {
        if (x <= 0) continue;
        if (static_cast<size_t>(x) > seen.size()) seen.resize(static_cast<size_t>(x), 0);
        if (!seen[static_cast<size_t>(x) - 1]) {
            seen[static_cast<size_t>(x) - 1] = 1;
            ++c.k;
        }
    }
    return c;
}

} // namespace dc
