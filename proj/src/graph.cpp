#include "dc/graph.hpp"

#include <algorithm>
#include <string>

namespace dc {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    Vertex probe = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), probe);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) raise(errc::bad_argument, "vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::vertex_range, "edge endpoint out of range: (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) raise(errc::loop_edge, "loop edge at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m += static_cast<long long>(list.size());
    }
    g.m /= 2;
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.n, 0);
    for (Vertex s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (v < 0 || v >= g.n) raise(errc::vertex_range, "subgraph vertex out of range");
    std::vector<Vertex> index(g.n, -1);
    for (size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (Vertex u : s)
        for (Vertex v : g.adj[u])
            if (u < v && index[v] >= 0) kept.emplace_back(index[u], index[v]);
    InducedSubgraph out;
    out.graph = from_edges(static_cast<int>(s.size()), kept);
    out.original = std::move(s);
    return out;
}

Graph complement(const Graph& g) {
    if (g.n > 4096) raise(errc::too_large, "complement limited to n <= 4096");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.n; ++u) {
        size_t k = 0;
        for (Vertex v = u + 1; v < g.n; ++v) {
            while (k < g.adj[u].size() && g.adj[u][k] < v) ++k;
            bool present = k < g.adj[u].size() && g.adj[u][k] == v;
            if (!present) edges.emplace_back(u, v);
        }
    }
    return from_edges(g.n, edges);
}

} // namespace dc
