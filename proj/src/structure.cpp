#include "dc/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dc {

BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) raise(errc::disconnected, "blocks requires a connected graph");
    BlockDecomposition out;
    out.edges = g.edges();
    out.block_of_edge.assign(out.edges.size(), -1);
    if (g.n == 0) return out;

    std::map<std::pair<Vertex, Vertex>, int> edge_index;
    for (size_t i = 0; i < out.edges.size(); ++i) edge_index[out.edges[i]] = static_cast<int>(i);
    auto canon = [](Vertex a, Vertex b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };

    // Iterative DFS with lowpoints; edges stack off into blocks.
    const int n = g.n;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<size_t> iter(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> raw_blocks;
    std::vector<char> is_art(n, 0);
    int timer = 0;

    std::vector<Vertex> stack{0};
    num[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex v = stack.back();
        if (iter[v] < g.adj[v].size()) {
            Vertex w = g.adj[v][iter[v]++];
            if (num[w] < 0) {
                edge_stack.push_back(canon(v, w));
                parent[w] = v;
                ++child_count[v];
                num[w] = low[w] = timer++;
                stack.push_back(w);
            } else if (w != parent[v] && num[w] < num[v]) {
                edge_stack.push_back(canon(v, w));
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            Vertex p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    // p closes a block; pop edges down to (p, v).
                    std::vector<std::pair<Vertex, Vertex>> blk;
                    std::pair<Vertex, Vertex> stop = canon(p, v);
                    for (;;) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == stop) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                    if (parent[p] >= 0 || child_count[p] >= 2) is_art[p] = 1;
                }
            }
        }
    }

    // Deterministic order: by the smallest edge contained in each block.
    for (auto& blk : raw_blocks) std::sort(blk.begin(), blk.end());
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    for (size_t bi = 0; bi < raw_blocks.size(); ++bi) {
        std::set<Vertex> verts;
        for (const auto& e : raw_blocks[bi]) {
            verts.insert(e.first);
            verts.insert(e.second);
            out.block_of_edge[static_cast<size_t>(edge_index.at(e))] = static_cast<int>(bi);
        }
        out.blocks.emplace_back(verts.begin(), verts.end());
    }
    for (Vertex v = 0; v < n; ++v)
        if (is_art[v]) out.articulation.push_back(v);
    return out;
}

LocalConnectivity is_locally_connected(const Graph& g) {
    std::vector<int> mark(g.n, -1), pos(g.n, -1);
    std::vector<char> seen;
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        if (nb.empty()) return {false, v};
        for (size_t i = 0; i < nb.size(); ++i) {
            mark[nb[i]] = v;
            pos[nb[i]] = static_cast<int>(i);
        }
        // BFS inside N(v).
        seen.assign(nb.size(), 0);
        stack.assign(1, nb[0]);
        seen[0] = 1;
        size_t count = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.adj[x])
                if (mark[y] == v && !seen[pos[y]]) {
                    seen[pos[y]] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != nb.size()) return {false, v};
    }
    return {true, std::nullopt};
}

bool blocks_locally_connected(const Graph& g) {
    if (g.n <= 2) return true;
    for (const auto& blk : blocks(g).blocks) {
        if (blk.size() < 3) continue;
        if (!is_locally_connected(induced_subgraph(g, blk).graph).ok) return false;
    }
    return true;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u]) {
            if (v < u) continue;
            std::vector<Vertex> common;
            std::set_intersection(g.adj[u].begin(), g.adj[u].end(), g.adj[v].begin(),
                                  g.adj[v].end(), std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (g.has_edge(common[i], common[j])) {
                        std::array<Vertex, 4> quad{u, v, common[i], common[j]};
                        std::sort(quad.begin(), quad.end());
                        return quad;
                    }
        }
    return std::nullopt;
}

std::optional<ConstructionOrder> construction_order(const Graph& g) {
    if (g.n < 2) raise(errc::bad_argument, "construction_order requires n >= 2");
    if (!is_connected(g)) raise(errc::disconnected, "construction_order requires a connected graph");

    ConstructionOrder co;
    auto all_edges = g.edges();
    Vertex u0 = all_edges.front().first, v0 = all_edges.front().second;
    std::vector<char> placed(g.n, 0);
    std::vector<std::vector<Vertex>> placed_nbrs(g.n);
    std::map<Vertex, std::pair<Vertex, Vertex>> ready; // vertex -> witness pair

    auto place = [&](Vertex p) {
        placed[p] = 1;
        co.order.push_back(p);
        for (Vertex w : g.adj[p]) {
            if (placed[w]) continue;
            if (!ready.count(w))
                for (Vertex a : placed_nbrs[w])
                    if (g.has_edge(a, p)) {
                        ready[w] = {std::min(a, p), std::max(a, p)};
                        break;
                    }
            placed_nbrs[w].push_back(p);
        }
    };

    place(u0);
    place(v0);
    while (!ready.empty()) {
        auto it = ready.begin(); // smallest ready vertex
        Vertex v = it->first;
        co.attach.push_back(it->second);
        ready.erase(it);
        place(v);
    }
    if (static_cast<int>(co.order.size()) != g.n) return std::nullopt;
    return co;
}

bool validate_construction_order(const Graph& g, const ConstructionOrder& co) {
    if (static_cast<int>(co.order.size()) != g.n || g.n < 2) return false;
    if (co.attach.size() + 2 != co.order.size()) return false;
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < co.order.size(); ++i) {
        Vertex v = co.order[i];
        if (v < 0 || v >= g.n || pos[v] >= 0) return false;
        pos[v] = static_cast<int>(i);
    }
    if (!g.has_edge(co.order[0], co.order[1])) return false;
    for (size_t i = 0; i < co.attach.size(); ++i) {
        Vertex v = co.order[i + 2];
        auto [a, b] = co.attach[i];
        if (pos[a] >= static_cast<int>(i + 2) || pos[b] >= static_cast<int>(i + 2)) return false;
        if (!g.has_edge(a, b) || !g.has_edge(a, v) || !g.has_edge(b, v)) return false;
    }
    return true;
}

} // namespace dc
