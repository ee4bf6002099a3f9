#include "dc/generators.hpp"

#include "dc/structure.hpp"

#include <algorithm>

namespace dc {

namespace {

// Substream tags; fixed so that corpora are reproducible.
constexpr std::uint64_t kTagTree = 0;
constexpr std::uint64_t kTagEdges = 1;
constexpr std::uint64_t kTagStructure = 2;
constexpr std::uint64_t kTagChords = 3;

constexpr double kNewBlockProbability = 0.25;
constexpr int kVerifyLimit = 200;

std::vector<Vertex> random_parents(int n, SplitMix64& rng) {
    std::vector<Vertex> parent(n, -1);
    for (Vertex v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(rng.bounded(v));
    return parent;
}

struct DenseGraph {
    int n;
    std::vector<std::vector<char>> at;
    std::vector<std::vector<Vertex>> nbrs;

    explicit DenseGraph(int n_) : n(n_), at(n_, std::vector<char>(n_, 0)), nbrs(n_) {}

    void add(Vertex u, Vertex v) {
        at[u][v] = at[v][u] = 1;
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
    }

    Graph freeze() const {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : nbrs[u])
                if (u < v) edges.emplace_back(u, v);
        return from_edges(n, edges);
    }
};

// Interior of the tree path between u and v, by depth walk.
template <typename Fn>
bool for_each_path_interior(const std::vector<Vertex>& parent, const std::vector<int>& depth,
                            Vertex u, Vertex v, Fn&& fn) {
    Vertex a = u, b = v;
    int da = depth[a], db = depth[b];
    while (da > db) {
        a = parent[a];
        --da;
        if (a != v && !fn(a)) return false;
    }
    while (db > da) {
        b = parent[b];
        --db;
        if (b != u && !fn(b)) return false;
    }
    while (a != b) {
        a = parent[a];
        b = parent[b];
        if (a != b || (a != u && a != v)) {
            if (a != u && a != v && !fn(a)) return false;
            if (b != a && b != u && b != v && !fn(b)) return false;
        }
    }
    return true;
}

GeneratedWithTree gen_saturated_from_tree(const GenSpec& spec, bool forbid_k4) {
    if (spec.n < 1) raise(errc::bad_argument, "generator requires n >= 1");
    if (spec.n > 4096) raise(errc::too_large, "generator limited to n <= 4096");
    const int n = spec.n;
    SplitMix64 tree_rng = SplitMix64::stream(spec.seed, kTagTree);
    SplitMix64 edge_rng = SplitMix64::stream(spec.seed, kTagEdges);

    std::vector<Vertex> parent = random_parents(n, tree_rng);
    std::vector<int> depth(n, 0);
    for (Vertex v = 1; v < n; ++v) depth[v] = depth[parent[v]] + 1;

    DenseGraph dg(n);
    for (Vertex v = 1; v < n; ++v) dg.add(v, parent[v]);

    // One coin per candidate pair, drawn the first time the pair becomes
    // eligible (its whole tree-path interior adjacent to both endpoints).
    std::vector<std::pair<Vertex, Vertex>> undecided;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!dg.at[u][v]) undecided.emplace_back(u, v);

    auto eligible = [&](Vertex u, Vertex v) {
        return for_each_path_interior(parent, depth, u, v,
                                      [&](Vertex w) { return dg.at[u][w] && dg.at[v][w]; });
    };
    auto completes_k4 = [&](Vertex u, Vertex v) {
        for (Vertex w : dg.nbrs[u]) {
            if (!dg.at[v][w]) continue;
            for (Vertex x : dg.nbrs[u])
                if (x != w && dg.at[v][x] && dg.at[w][x]) return true;
        }
        return false;
    };

    bool added = true;
    while (added) {
        added = false;
        std::vector<std::pair<Vertex, Vertex>> still;
        for (auto [u, v] : undecided) {
            if (!eligible(u, v)) {
                still.emplace_back(u, v);
                continue;
            }
            if (forbid_k4 && completes_k4(u, v)) continue; // permanently rejected
            if (edge_rng.unit() < spec.density) {
                dg.add(u, v);
                added = true;
            }
        }
        undecided = std::move(still);
    }

    GeneratedWithTree out;
    out.graph = dg.freeze();
    out.tree.parent = std::move(parent);
    out.tree.root = 0;

    if (n <= kVerifyLimit) {
        if (!find_mno(out.graph))
            raise(errc::verification_failed, "generated graph has no maximum neighbourhood ordering");
        if (forbid_k4 && find_k4(out.graph))
            raise(errc::verification_failed, "generated graph contains a K4");
    }
    return out;
}

} // namespace

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "duallyChordal") return Family::dually_chordal;
    if (name == "k4FreeDuallyChordal") return Family::k4_free_dually_chordal;
    if (name == "locallyConnectedBlocks") return Family::locally_connected_blocks;
    if (name == "connectedRandom") return Family::connected_random;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::dually_chordal: return "duallyChordal";
    case Family::k4_free_dually_chordal: return "k4FreeDuallyChordal";
    case Family::locally_connected_blocks: return "locallyConnectedBlocks";
    case Family::connected_random: return "connectedRandom";
    }
    return "";
}

Graph add_universal_vertex(const Graph& g) {
    auto edges = g.edges();
    for (Vertex v = 0; v < g.n; ++v) edges.emplace_back(v, g.n);
    return from_edges(g.n + 1, edges);
}

Graph reduce_3col_to_4col(const Graph& g) { return add_universal_vertex(g); }

GeneratedWithTree gen_dually_chordal_with_tree(const GenSpec& spec) {
    return gen_saturated_from_tree(spec, false);
}

Graph gen_dually_chordal(const GenSpec& spec) { return gen_dually_chordal_with_tree(spec).graph; }

GeneratedWithTree gen_k4_free_dually_chordal_with_tree(const GenSpec& spec) {
    return gen_saturated_from_tree(spec, true);
}

Graph gen_k4_free_dually_chordal(const GenSpec& spec) {
    return gen_k4_free_dually_chordal_with_tree(spec).graph;
}

Graph gen_connected_random(const GenSpec& spec) {
    if (spec.n < 1) raise(errc::bad_argument, "gen_connected_random requires n >= 1");
    SplitMix64 tree_rng = SplitMix64::stream(spec.seed, kTagTree);
    SplitMix64 edge_rng = SplitMix64::stream(spec.seed, kTagEdges);
    std::vector<Vertex> parent = random_parents(spec.n, tree_rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(parent[v], v);
    if (spec.density > 0) {
        for (Vertex u = 0; u < spec.n; ++u)
            for (Vertex v = u + 1; v < spec.n; ++v) {
                if (parent[v] == u || parent[u] == v) continue;
                if (edge_rng.unit() < spec.density) edges.emplace_back(u, v);
            }
    }
    return from_edges(spec.n, edges);
}

Graph grow_locally_connected_block(int n, double density, SplitMix64& attach_rng,
                                   SplitMix64& chord_rng) {
    if (n < 2) raise(errc::bad_argument, "a block needs at least 2 vertices");
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::pair<Vertex, Vertex>> block_edges{{0, 1}};
    adj[0].push_back(1);
    adj[1].push_back(0);

    auto has = [&](Vertex a, Vertex b) {
        for (Vertex x : adj[a])
            if (x == b) return true;
        return false;
    };
    auto add = [&](Vertex a, Vertex b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        block_edges.emplace_back(std::min(a, b), std::max(a, b));
    };

    for (Vertex v = 2; v < n; ++v) {
        auto [x, y] = block_edges[attach_rng.bounded(block_edges.size())];
        add(v, x);
        add(v, y);
        // Optional chord to a vertex sharing a block edge with v's anchors;
        // the shared endpoint keeps every open neighbourhood connected.
        if (chord_rng.unit() < density) {
            for (int tries = 0; tries < 3; ++tries) {
                auto [p, q] = block_edges[chord_rng.bounded(block_edges.size())];
                bool vp = has(v, p), vq = has(v, q);
                Vertex z = -1;
                if (vp && !vq && q != v)
                    z = q;
                else if (vq && !vp && p != v)
                    z = p;
                if (z >= 0) {
                    add(v, z);
                    break;
                }
            }
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges(block_edges.begin(), block_edges.end());
    return from_edges(n, edges);
}

Graph gen_locally_connected_blocks(const GenSpec& spec) {
    if (spec.n < 2) raise(errc::bad_argument, "gen_locally_connected_blocks requires n >= 2");
    const int n = spec.n;
    SplitMix64 structure_rng = SplitMix64::stream(spec.seed, kTagStructure);
    SplitMix64 attach_rng = SplitMix64::stream(spec.seed, kTagTree);
    SplitMix64 chord_rng = SplitMix64::stream(spec.seed, kTagChords);

    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::vector<std::pair<Vertex, Vertex>>> block_edges;

    auto has = [&](Vertex a, Vertex b) {
        for (Vertex x : adj[a])
            if (x == b) return true;
        return false;
    };
    auto add = [&](int block, Vertex a, Vertex b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        block_edges[static_cast<size_t>(block)].emplace_back(std::min(a, b), std::max(a, b));
    };

    block_edges.emplace_back();
    adj[0].push_back(1);
    adj[1].push_back(0);
    block_edges[0].emplace_back(0, 1);
    int current = 0;

    for (Vertex v = 2; v < n; ++v) {
        if (structure_rng.unit() < kNewBlockProbability) {
            Vertex articulation = static_cast<Vertex>(structure_rng.bounded(v));
            block_edges.emplace_back();
            current = static_cast<int>(block_edges.size()) - 1;
            add(current, articulation, v);
            continue;
        }
        auto& edges = block_edges[static_cast<size_t>(current)];
        auto [x, y] = edges[attach_rng.bounded(edges.size())];
        add(current, v, x);
        add(current, v, y);
        if (chord_rng.unit() < spec.density) {
            for (int tries = 0; tries < 3; ++tries) {
                auto [p, q] = edges[chord_rng.bounded(edges.size())];
                bool vp = has(v, p), vq = has(v, q);
                Vertex z = -1;
                if (vp && !vq && q != v)
                    z = q;
                else if (vq && !vp && p != v)
                    z = p;
                if (z >= 0) {
                    add(current, v, z);
                    break;
                }
            }
        }
    }

    std::vector<std::pair<Vertex, Vertex>> all;
    for (const auto& blk : block_edges) all.insert(all.end(), blk.begin(), blk.end());
    Graph g = from_edges(n, all);
    if (n <= kVerifyLimit && !blocks_locally_connected(g))
        raise(errc::verification_failed, "generated graph has a block that is not locally connected");
    return g;
}

Graph generate(const GenSpec& spec) {
    if (spec.density < 0.0 || spec.density > 1.0)
        raise(errc::bad_argument, "density must lie in [0, 1]");
    switch (spec.family) {
    case Family::dually_chordal: return gen_dually_chordal(spec);
    case Family::k4_free_dually_chordal: return gen_k4_free_dually_chordal(spec);
    case Family::locally_connected_blocks: return gen_locally_connected_blocks(spec);
    case Family::connected_random: return gen_connected_random(spec);
    }
    raise(errc::bad_argument, "unknown family");
}

} // namespace dc
