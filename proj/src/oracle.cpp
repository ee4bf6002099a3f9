#include "dc/oracle.hpp"

#include "dc/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace dc {

namespace {

bool color_backtrack(const Graph& g, const std::vector<Vertex>& order, size_t idx, int k,
                     int max_used, std::vector<int>& color) {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    // New colours are introduced in increasing order; trying more than one
    // unused colour would only revisit symmetric assignments.
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (Vertex w : g.adj[v])
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_backtrack(g, order, idx + 1, k, std::max(max_used, c), color)) return true;
        color[v] = 0;
    }
    return false;
}

} // namespace

std::optional<Coloring> brute_force_k_colorable(const Graph& g, int k) {
    if (k < 1) raise(errc::bad_argument, "brute_force_k_colorable: k must be positive");
    if (g.n > 20) raise(errc::too_large, "brute_force_k_colorable limited to n <= 20");
    std::vector<Vertex> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    std::vector<int> color(g.n, 0);
    if (!color_backtrack(g, order, 0, k, 0, color)) return std::nullopt;
    return make_coloring(std::move(color));
}

int chromatic_number(const Graph& g) {
    if (g.n > 14) raise(errc::too_large, "chromatic_number limited to n <= 14");
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k)
        if (brute_force_k_colorable(g, k)) return k;
    return g.n; // unreachable: n colours always suffice
}

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj, std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot on the candidate covering most of P.
    Mask px = p | x;
    int pivot = -1, best = -1;
    for (Mask s = px; s;) {
        int u = std::countr_zero(s);
        s &= s - 1;
        int cover = std::popcount(p & adj[u]);
        if (cover > best) {
            best = cover;
            pivot = u;
        }
    }
    Mask cand = p & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        Mask bit = Mask{1} << v;
        cand &= cand - 1;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex w : g.adj[v]) adj[v] |= Mask{1} << w;
    return adj;
}

} // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
    if (g.n > 64) raise(errc::too_large, "maximal_cliques limited to n <= 64");
    if (g.n == 0) return {};
    std::vector<Mask> adj = adjacency_masks(g);
    std::vector<Mask> raw;
    Mask all = g.n == 64 ? ~Mask{0} : ((Mask{1} << g.n) - 1);
    bron_kerbosch(0, all, 0, adj, raw);
    std::vector<std::vector<Vertex>> out;
    out.reserve(raw.size());
    for (Mask m : raw) {
        std::vector<Vertex> clique;
        while (m) {
            clique.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.push_back(std::move(clique));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueGraph clique_graph(const Graph& g) {
    CliqueGraph cg;
    cg.cliques = maximal_cliques(g);
    const int k = static_cast<int>(cg.cliques.size());
    std::vector<Mask> masks(k, 0);
    for (int i = 0; i < k; ++i)
        for (Vertex v : cg.cliques[i]) masks[i] |= Mask{1} << v;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (masks[i] & masks[j]) edges.emplace_back(i, j);
    cg.graph = from_edges(k, edges);
    return cg;
}

bool is_chordal(const Graph& g) {
    const int n = g.n;
    if (n <= 2) return true;
    // Maximum cardinality search, numbering n-1 down to 0.
    std::vector<int> weight(n, 0), position(n, -1);
    std::vector<Vertex> by_position(n, -1);
    for (int slot = n - 1; slot >= 0; --slot) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (position[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
        position[pick] = slot;
        by_position[slot] = pick;
        for (Vertex w : g.adj[pick])
            if (position[w] < 0) ++weight[w];
    }
    // Elimination check: later neighbours of v minus the closest one must be
    // neighbours of that closest one.
    for (int slot = 0; slot < n; ++slot) {
        Vertex v = by_position[slot];
        Vertex nearest = -1;
        for (Vertex w : g.adj[v])
            if (position[w] > slot && (nearest < 0 || position[w] < position[nearest])) nearest = w;
        if (nearest < 0) continue;
        for (Vertex w : g.adj[v])
            if (position[w] > position[nearest] && !g.has_edge(nearest, w)) return false;
    }
    return true;
}

bool is_clique_chordal(const Graph& g) { return is_chordal(clique_graph(g).graph); }

std::vector<CycleWitness> find_chordless_cycles(const Graph& g, int min_len) {
    if (g.n > 14) raise(errc::too_large, "find_chordless_cycles limited to n <= 14");
    if (min_len < 4) raise(errc::bad_argument, "find_chordless_cycles: min_len must be >= 4");
    std::vector<std::uint32_t> adj(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex w : g.adj[v]) adj[v] |= 1u << w;

    std::vector<CycleWitness> out;
    std::vector<Vertex> path;

    // Grow induced paths from the smallest cycle vertex; a neighbour of the
    // start can only close the cycle, anything else extends.
    auto dfs = [&](auto&& self, Vertex start, std::uint32_t path_set) -> void {
        Vertex last = path.back();
        std::uint32_t inner = path_set & ~(1u << last) & ~(1u << start);
        for (Vertex w = start + 1; w < g.n; ++w) {
            std::uint32_t bit = 1u << w;
            if (path_set & bit) continue;
            if (!(adj[last] & bit)) continue;
            if (adj[w] & inner) continue; // chord to the path interior
            if (adj[w] & (1u << start)) {
                if (static_cast<int>(path.size()) + 1 >= min_len && path[1] < w) {
                    CycleWitness cw;
                    cw.vertices = path;
                    cw.vertices.push_back(w);
                    out.push_back(std::move(cw));
                }
            } else {
                path.push_back(w);
                self(self, start, path_set | bit);
                path.pop_back();
            }
        }
    };

    for (Vertex s = 0; s < g.n; ++s) {
        for (Vertex v : g.adj[s]) {
            if (v <= s) continue;
            path = {s, v};
            dfs(dfs, s, (1u << s) | (1u << v));
        }
    }
    return out;
}

WheelHubResult wheel_hub(const Graph& g, const CycleWitness& cycle, const CompatibleTree& tree) {
    const auto& c = cycle.vertices;
    const int k = static_cast<int>(c.size());
    if (k < 4) raise(errc::bad_argument, "wheel_hub: cycle must have length >= 4");
    std::vector<char> on_cycle(g.n, 0);
    for (Vertex v : c) {
        if (v < 0 || v >= g.n || on_cycle[v]) raise(errc::bad_argument, "wheel_hub: bad cycle");
        on_cycle[v] = 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(c[i], c[j]) != consecutive)
                raise(errc::bad_argument, "wheel_hub: vertices do not form an induced cycle");
        }

    if (find_k4(g)) raise(errc::precondition, "wheel_hub: graph contains a K4");
    if (!verify_path_condition(g, tree))
        raise(errc::precondition, "wheel_hub: tree fails the path-adjacency condition");

    WheelHubResult res;
    for (Vertex w = 0; w < g.n; ++w) {
        if (on_cycle[w]) continue;
        bool all = true;
        for (Vertex v : c)
            if (!g.has_edge(w, v)) {
                all = false;
                break;
            }
        if (all) {
            res.hub = w;
            break;
        }
    }
    res.tree_edge_check = true;
    for (int i = 0; i < k; ++i) {
        Vertex a = c[i], b = c[(i + 1) % k];
        if (tree.parent[a] == b || tree.parent[b] == a) res.tree_edge_check = false;
    }
    return res;
}

bool is_perfect_desk(const Graph& g) {
    if (g.n > 14) raise(errc::too_large, "is_perfect_desk limited to n <= 14");
    for (const auto& cw : find_chordless_cycles(g, 5))
        if (cw.vertices.size() % 2 == 1) return false;
    for (const auto& cw : find_chordless_cycles(complement(g), 5))
        if (cw.vertices.size() % 2 == 1) return false;
    return true;
}

} // namespace dc
