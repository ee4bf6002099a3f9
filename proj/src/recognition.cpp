#include "dc/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace dc {

namespace {

// N_alive[w] subset of N_alive[u]? Closed neighbourhoods, restricted to alive.
bool closed_nbhd_subset(const Graph& g, Vertex w, Vertex u, const std::vector<char>& alive) {
    if (w != u && !g.has_edge(w, u)) return false; // w itself must lie in N[u]
    for (Vertex x : g.adj[w]) {
        if (!alive[x]) continue;
        if (x != u && !g.has_edge(u, x)) return false;
    }
    return true;
}

bool is_max_neighbour(const Graph& g, Vertex v, Vertex u, const std::vector<char>& alive) {
    if (!closed_nbhd_subset(g, v, u, alive)) return false;
    for (Vertex w : g.adj[v]) {
        if (!alive[w]) continue;
        if (!closed_nbhd_subset(g, w, u, alive)) return false;
    }
    return true;
}

int alive_closed_degree(const Graph& g, Vertex v, const std::vector<char>& alive) {
    int d = 1;
    for (Vertex w : g.adj[v])
        if (alive[w]) ++d;
    return d;
}

// Proper maximum neighbour only (u != v), or absent.
std::optional<Vertex> pick_proper_max_neighbour(const Graph& g, Vertex v,
                                                const std::vector<char>& alive) {
    std::vector<std::pair<int, Vertex>> cand; // (-closed degree, id)
    for (Vertex u : g.adj[v])
        if (alive[u]) cand.emplace_back(-alive_closed_degree(g, u, alive), u);
    std::sort(cand.begin(), cand.end());
    for (auto [negdeg, u] : cand)
        if (is_max_neighbour(g, v, u, alive)) return u;
    return std::nullopt;
}

} // namespace

std::optional<Vertex> maximum_neighbour(const Graph& g, Vertex v, const std::vector<char>& alive) {
    if (v < 0 || v >= g.n || static_cast<int>(alive.size()) != g.n)
        raise(errc::bad_argument, "maximum_neighbour: bad vertex or alive mask");
    if (!alive[v]) raise(errc::bad_argument, "maximum_neighbour: v is not alive");
    if (auto u = pick_proper_max_neighbour(g, v, alive)) return u;
    if (is_max_neighbour(g, v, v, alive)) return v;
    return std::nullopt;
}

std::optional<MaxNeighbourhoodOrdering> find_mno(const Graph& g) {
    if (g.n == 0) raise(errc::bad_argument, "find_mno: empty graph");
    if (!is_connected(g)) raise(errc::disconnected, "find_mno requires a connected graph");

    std::vector<char> alive(g.n, 1);
    MaxNeighbourhoodOrdering mno;
    mno.order.reserve(g.n);
    mno.witness.reserve(g.n);

    // Eliminating a vertex with a proper maximum neighbour keeps the residual
    // graph connected, and whenever any residual vertex of a multi-vertex
    // residual has a maximum neighbour, some vertex has a proper one.
    for (int remaining = g.n; remaining > 1; --remaining) {
        Vertex picked = -1, wit = -1;
        for (Vertex v = 0; v < g.n && picked < 0; ++v) {
            if (!alive[v]) continue;
            if (auto u = pick_proper_max_neighbour(g, v, alive)) {
                picked = v;
                wit = *u;
            }
        }
        if (picked < 0) return std::nullopt;
        mno.order.push_back(picked);
        mno.witness.push_back(wit);
        alive[picked] = 0;
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (alive[v]) {
            mno.order.push_back(v);
            mno.witness.push_back(v);
        }
    return mno;
}

std::optional<MaxNeighbourhoodOrdering> exhaustive_mno_search(const Graph& g) {
    if (g.n > 8) raise(errc::too_large, "exhaustive_mno_search limited to n <= 8");
    if (g.n == 0) raise(errc::bad_argument, "exhaustive_mno_search: empty graph");

    const int n = g.n;
    std::vector<std::uint32_t> closed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (Vertex w : g.adj[v]) closed[v] |= 1u << w;
    }

    std::unordered_set<std::uint32_t> dead; // residual sets with no completion
    MaxNeighbourhoodOrdering mno;

    auto residual_witness = [&](std::uint32_t mask, Vertex v) -> std::optional<Vertex> {
        std::uint32_t nv = closed[v] & mask;
        std::optional<Vertex> self;
        for (std::uint32_t cand = nv; cand;) {
            Vertex u = static_cast<Vertex>(std::countr_zero(cand));
            cand &= cand - 1;
            std::uint32_t nu = closed[u] & mask;
            bool ok = true;
            for (std::uint32_t ws = nv; ws && ok;) {
                Vertex w = static_cast<Vertex>(std::countr_zero(ws));
                ws &= ws - 1;
                if ((closed[w] & mask & ~nu) != 0) ok = false;
            }
            if (ok) {
                if (u == v)
                    self = u;
                else
                    return u; // prefer a proper witness for the record
            }
        }
        return self;
    };

    auto rec = [&](auto&& self, std::uint32_t mask) -> bool {
        if (mask == 0) return true;
        if (dead.count(mask)) return false;
        for (std::uint32_t vs = mask; vs;) {
            Vertex v = static_cast<Vertex>(std::countr_zero(vs));
            vs &= vs - 1;
            auto u = residual_witness(mask, v);
            if (!u) continue;
            mno.order.push_back(v);
            mno.witness.push_back(*u);
            if (self(self, mask & ~(1u << v))) return true;
            mno.order.pop_back();
            mno.witness.pop_back();
        }
        dead.insert(mask);
        return false;
    };

    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    if (rec(rec, all)) return mno;
    return std::nullopt;
}

bool is_valid_mno(const Graph& g, const MaxNeighbourhoodOrdering& mno) {
    const int n = g.n;
    if (static_cast<int>(mno.order.size()) != n || static_cast<int>(mno.witness.size()) != n)
        return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : mno.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    std::vector<char> alive(n, 1);
    for (int i = 0; i < n; ++i) {
        Vertex v = mno.order[i];
        Vertex u = mno.witness[i];
        if (u < 0 || u >= n || !alive[u]) return false;
        if (u != v && !g.has_edge(u, v)) return false;
        if (!is_max_neighbour(g, v, u, alive)) return false;
        alive[v] = 0;
    }
    return true;
}

namespace {

struct TreeScaffold {
    std::vector<Vertex> parent;
    std::vector<int> depth;
    std::vector<char> placed;
};

// With p as the parent of the new leaf v, the interior of the tree path for
// the graph edge vx is {p} plus everything strictly between p and x; all of
// it must be adjacent to both v and x (p is adjacent to v by construction).
bool parent_ok_for_edge(const Graph& g, const TreeScaffold& t, Vertex v, Vertex p, Vertex x) {
    if (p == x) return true; // the edge vx becomes the tree edge itself
    if (!g.has_edge(x, p)) return false;
    Vertex a = p, b = x;
    int da = t.depth[a], db = t.depth[b];
    auto ok = [&](Vertex w) { return g.has_edge(v, w) && g.has_edge(x, w); };
    while (da > db) {
        a = t.parent[a];
        --da;
        if (a != x && !ok(a)) return false;
    }
    while (db > da) {
        b = t.parent[b];
        --db;
        if (b != p && !ok(b)) return false;
    }
    while (a != b) {
        a = t.parent[a];
        b = t.parent[b];
        if (!ok(a)) return false;
        if (b != a && !ok(b)) return false;
    }
    return true;
}

bool attach_search(const Graph& g, const MaxNeighbourhoodOrdering& mno, int idx, TreeScaffold& t,
                   long long& budget) {
    if (idx < 0) return true;
    Vertex v = mno.order[idx];
    std::vector<Vertex> placed_nbrs;
    for (Vertex x : g.adj[v])
        if (t.placed[x]) placed_nbrs.push_back(x);
    if (placed_nbrs.empty()) return false;

    // Witness first, then remaining residual neighbours by id.
    std::vector<Vertex> cands;
    Vertex w = mno.witness[idx];
    if (w != v && t.placed[w]) cands.push_back(w);
    for (Vertex x : placed_nbrs)
        if (x != w) cands.push_back(x);

    for (Vertex p : cands) {
        if (--budget <= 0) return false;
        bool ok = true;
        for (Vertex x : placed_nbrs)
            if (!parent_ok_for_edge(g, t, v, p, x)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        t.parent[v] = p;
        t.depth[v] = t.depth[p] + 1;
        t.placed[v] = 1;
        if (attach_search(g, mno, idx - 1, t, budget)) return true;
        t.placed[v] = 0;
        t.parent[v] = -1;
    }
    return false;
}

// Exhaustive spanning-tree search with a work budget. Grows a forest edge by
// edge; whenever two components merge, the forest path between any two
// graph-adjacent vertices of the merged component is final, so a violated
// path prunes the whole branch.
std::optional<CompatibleTree> enumerate_trees(const Graph& g, long long budget) {
    auto edges = g.edges();
    const int n = g.n;
    const int m = static_cast<int>(edges.size());

    std::vector<int> dsu(n);
    std::vector<std::vector<Vertex>> members(n), fadj(n);
    for (int i = 0; i < n; ++i) {
        dsu[i] = i;
        members[i] = {i};
    }
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x];
        return x;
    };

    // Interior of the (unique) forest path between connected u and v.
    auto forest_path_ok = [&](Vertex u, Vertex v) {
        std::vector<Vertex> from(n, -2);
        std::vector<Vertex> stack{u};
        from[u] = -1;
        while (!stack.empty() && from[v] == -2) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : fadj[x])
                if (from[y] == -2) {
                    from[y] = x;
                    stack.push_back(y);
                }
        }
        for (Vertex w = from[v]; w != u && w >= 0; w = from[w])
            if (!g.has_edge(u, w) || !g.has_edge(v, w)) return false;
        return true;
    };

    std::vector<int> chosen;
    std::optional<CompatibleTree> found;

    auto rec = [&](auto&& self, int idx) -> bool {
        if (--budget <= 0) return true; // abort: budget exhausted
        if (static_cast<int>(chosen.size()) == n - 1) {
            CompatibleTree t;
            t.parent.assign(n, -1);
            t.root = 0;
            std::vector<Vertex> stack{0};
            std::vector<char> seen(n, 0);
            seen[0] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : fadj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        t.parent[y] = x;
                        stack.push_back(y);
                    }
            }
            found = std::move(t);
            return true;
        }
        if (idx == m || static_cast<int>(chosen.size()) + (m - idx) < n - 1) return false;
        auto [ea, eb] = edges[static_cast<size_t>(idx)];
        int ra = find(ea), rb = find(eb);
        if (ra != rb) {
            dsu[ra] = rb;
            fadj[ea].push_back(eb);
            fadj[eb].push_back(ea);
            bool viable = true;
            for (Vertex u : members[ra]) {
                for (Vertex v : g.adj[u]) {
                    if (find(v) != rb) continue;
                    bool other_side = false;
                    for (Vertex w : members[rb])
                        if (w == v) other_side = true;
                    if (other_side && !forest_path_ok(u, v)) {
                        viable = false;
                        break;
                    }
                }
                if (!viable) break;
            }
            if (viable) {
                size_t rb_size = members[rb].size();
                members[rb].insert(members[rb].end(), members[ra].begin(), members[ra].end());
                chosen.push_back(idx);
                if (self(self, idx + 1)) return true;
                chosen.pop_back();
                members[rb].resize(rb_size);
            }
            dsu[ra] = ra;
            fadj[ea].pop_back();
            fadj[eb].pop_back();
        }
        return self(self, idx + 1);
    };

    rec(rec, 0);
    if (found && !verify_path_condition(g, *found)) return std::nullopt;
    return found;
}

} // namespace

CompatibleTree build_compatible_tree(const Graph& g, const MaxNeighbourhoodOrdering& mno) {
    if (!is_valid_mno(g, mno))
        raise(errc::bad_argument, "build_compatible_tree: ordering is not a valid MNO");
    const int n = g.n;
    CompatibleTree tree;
    tree.parent.assign(n, -1);
    if (n == 1) {
        tree.root = 0;
        return tree;
    }

    // A universal vertex makes the star a valid tree: every interior is {hub}.
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == n - 1) {
            tree.root = u;
            for (Vertex v = 0; v < n; ++v)
                if (v != u) tree.parent[v] = u;
            return tree;
        }

    TreeScaffold t;
    t.parent.assign(n, -1);
    t.depth.assign(n, 0);
    t.placed.assign(n, 0);
    Vertex root = mno.order[n - 1];
    t.placed[root] = 1;
    long long budget = 2'000'000;
    if (attach_search(g, mno, n - 2, t, budget)) {
        tree.parent = t.parent;
        tree.root = root;
        if (verify_path_condition(g, tree)) return tree;
    }

    if (n <= 12) {
        if (auto found = enumerate_trees(g, 20'000'000)) return *found;
    }
    raise(errc::no_compatible_tree, "no spanning tree satisfying the path condition was found");
}

namespace {

std::vector<int> tree_depths(const CompatibleTree& t) {
    const int n = static_cast<int>(t.parent.size());
    std::vector<int> depth(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (depth[v] >= 0) continue;
        std::vector<Vertex> chain;
        Vertex x = v;
        while (x >= 0 && depth[x] < 0) {
            chain.push_back(x);
            x = t.parent[x];
        }
        int base = x < 0 ? -1 : depth[x];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    }
    return depth;
}

void validate_tree(const Graph& g, const CompatibleTree& t) {
    const int n = g.n;
    if (static_cast<int>(t.parent.size()) != n || t.root < 0 || t.root >= n ||
        t.parent[t.root] != -1)
        raise(errc::bad_argument, "malformed tree");
    int links = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (v == t.root) continue;
        Vertex p = t.parent[v];
        if (p < 0 || p >= n || !g.has_edge(v, p))
            raise(errc::bad_argument, "tree link is not a graph edge");
        ++links;
    }
    if (links != n - 1) raise(errc::bad_argument, "tree must have exactly n-1 links");
    // Acyclicity: every vertex must reach the root within n steps.
    for (Vertex v = 0; v < n; ++v) {
        Vertex x = v;
        int steps = 0;
        while (x != t.root && steps <= n) {
            x = t.parent[x];
            ++steps;
        }
        if (x != t.root) raise(errc::bad_argument, "tree contains a cycle");
    }
}

std::vector<Vertex> path_interior_with_depth(const CompatibleTree& t, const std::vector<int>& depth,
                                             Vertex u, Vertex v) {
    std::vector<Vertex> left, right;
    Vertex a = u, b = v;
    int da = depth[a], db = depth[b];
    while (da > db) {
        a = t.parent[a];
        --da;
        left.push_back(a);
    }
    while (db > da) {
        b = t.parent[b];
        --db;
        right.push_back(b);
    }
    while (a != b) {
        a = t.parent[a];
        b = t.parent[b];
        left.push_back(a);
        right.push_back(b);
    }
    // left ends at the meeting vertex; right holds the v-side strictly below it.
    std::vector<Vertex> interior = left;
    if (!right.empty()) {
        right.pop_back(); // the meeting vertex is already in `left`
        for (auto it = right.rbegin(); it != right.rend(); ++it) interior.push_back(*it);
    } else if (!interior.empty()) {
        interior.pop_back(); // meeting vertex is v itself
    }
    return interior;
}

} // namespace

std::vector<Vertex> tree_path_interior(const CompatibleTree& t, Vertex u, Vertex v) {
    const int n = static_cast<int>(t.parent.size());
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        raise(errc::bad_argument, "tree_path_interior: bad endpoints");
    std::vector<int> depth = tree_depths(t);
    return path_interior_with_depth(t, depth, u, v);
}

bool verify_path_condition(const Graph& g, const CompatibleTree& t) {
    validate_tree(g, t);
    std::vector<int> depth = tree_depths(t);
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u]) {
            if (v < u) continue;
            for (Vertex w : path_interior_with_depth(t, depth, u, v))
                if (!g.has_edge(u, w) || !g.has_edge(v, w)) return false;
        }
    return true;
}

TreeReport verify_compatible_tree(const Graph& g, const CompatibleTree& t,
                                  const std::vector<std::vector<Vertex>>& cliques) {
    validate_tree(g, t);
    TreeReport rep;
    std::vector<int> depth = tree_depths(t);

    rep.cond_path_adjacency = true;
    rep.clique_path = true;
    rep.max_edge_path_card = 0;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u]) {
            if (v < u) continue;
            auto interior = path_interior_with_depth(t, depth, u, v);
            rep.max_edge_path_card =
                std::max(rep.max_edge_path_card, static_cast<int>(interior.size()) + 2);
            for (Vertex w : interior)
                if (!g.has_edge(u, w) || !g.has_edge(v, w)) rep.cond_path_adjacency = false;
            std::vector<Vertex> closed = interior;
            closed.push_back(u);
            closed.push_back(v);
            for (size_t i = 0; i < closed.size() && rep.clique_path; ++i)
                for (size_t j = i + 1; j < closed.size(); ++j)
                    if (!g.has_edge(closed[i], closed[j])) {
                        rep.clique_path = false;
                        break;
                    }
        }

    rep.cond_clique_subtrees = true;
    std::vector<int> mark(g.n, -1);
    for (size_t ci = 0; ci < cliques.size(); ++ci) {
        const auto& clique = cliques[ci];
        for (Vertex v : clique) mark[v] = static_cast<int>(ci);
        // Union over tree links staying inside the clique.
        std::vector<Vertex> stack;
        std::vector<char> seen(clique.size(), 0);
        std::vector<int> pos(g.n, -1);
        for (size_t i = 0; i < clique.size(); ++i) pos[clique[i]] = static_cast<int>(i);
        std::vector<std::vector<Vertex>> adj(clique.size());
        for (Vertex v : clique) {
            Vertex p = t.parent[v];
            if (p >= 0 && mark[p] == static_cast<int>(ci)) {
                adj[pos[v]].push_back(pos[p]);
                adj[pos[p]].push_back(pos[v]);
            }
        }
        size_t count = 1;
        seen[0] = 1;
        stack.push_back(0);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != clique.size()) rep.cond_clique_subtrees = false;
    }
    return rep;
}

} // namespace dc
