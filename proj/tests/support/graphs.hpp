#pragma once

#include "dc/graph.hpp"

namespace dc::testsupport {

inline Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

/// Star K_{1,leaves}: hub is vertex 0.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

/// Wheel W_k: rim 0..k-1 in cyclic order, hub k.
inline Graph wheel_graph(int k) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return from_edges(k + 1, e);
}

/// Two triangles sharing vertex 0.
inline Graph bowtie_graph() {
    return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

/// K4 minus one edge (vertices 1 and 2 have degree 3).
inline Graph diamond_graph() {
    return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

/// Octahedron K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5).
inline Graph octahedron_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) e.emplace_back(i, j);
    return from_edges(6, e);
}

} // namespace dc::testsupport
