#include "dc/coloring.hpp"

#include "dc/structure.hpp"

#include <bit>
#include <deque>

namespace dc {

namespace {

// Three intrusive FIFO lists keyed by |avail|: bucket 0 holds |avail| <= 1,
// bucket 1 holds 2, bucket 2 holds 3. Per-vertex links give O(1) moves.
struct Buckets {
    std::vector<int> next, prev;
    std::vector<signed char> which;
    int head[3] = {-1, -1, -1};
    int tail[3] = {-1, -1, -1};
    int size[3] = {0, 0, 0};

    explicit Buckets(int n) : next(n, -1), prev(n, -1), which(n, -1) {}

    static int index_for(int avail_count) { return avail_count <= 1 ? 0 : avail_count - 1; }

    void push_back(int b, int v) {
        which[v] = static_cast<signed char>(b);
        prev[v] = tail[b];
        next[v] = -1;
        if (tail[b] >= 0)
            next[tail[b]] = v;
        else
            head[b] = v;
        tail[b] = v;
        ++size[b];
    }

    void erase(int v) {
        int b = which[v];
        if (prev[v] >= 0)
            next[prev[v]] = next[v];
        else
            head[b] = next[v];
        if (next[v] >= 0)
            prev[next[v]] = prev[v];
        else
            tail[b] = prev[v];
        which[v] = -1;
        --size[b];
    }

    int lowest_nonempty() const {
        for (int b = 0; b < 3; ++b)
            if (size[b] > 0) return b;
        return -1;
    }

    int pick(int b, SplitMix64* rng) const {
        int v = head[b];
        if (rng) {
            auto steps = rng->bounded(static_cast<std::uint64_t>(size[b]));
            while (steps-- > 0) v = next[v];
        }
        return v;
    }
};

} // namespace

ThreeColorResult three_color(const Graph& g, SplitMix64* tie_rng, const PopObserver& observer) {
    if (g.n == 0) raise(errc::bad_argument, "three_color: empty graph");
    if (!is_connected(g)) raise(errc::disconnected, "three_color requires a connected graph");

    const int n = g.n;
    std::vector<unsigned char> avail(n, 0b111);
    std::vector<char> done(n, 0);
    std::vector<int> color(n, 0);
    Buckets buckets(n);
    for (int v = 0; v < n; ++v) buckets.push_back(2, v);

    int uncolored = n;
    while (uncolored > 0) {
        int b = buckets.lowest_nonempty();
        int v = buckets.pick(b, tie_rng);
        buckets.erase(v);
        if (observer) {
            int lowest = 3;
            for (int w = 0; w < n; ++w)
                if (!done[w] && std::popcount(static_cast<unsigned>(avail[w])) < lowest)
                    lowest = std::popcount(static_cast<unsigned>(avail[w]));
            observer(v, std::popcount(static_cast<unsigned>(avail[v])), lowest);
        }
        if (avail[v] == 0) return {ThreeColorVerdict::not_three_colorable, std::nullopt};
        int c = std::countr_zero(static_cast<unsigned>(avail[v]));
        color[v] = c + 1;
        done[v] = 1;
        --uncolored;
        unsigned char bit = static_cast<unsigned char>(1u << c);
        for (Vertex w : g.adj[v]) {
            if (done[w] || !(avail[w] & bit)) continue;
            avail[w] = static_cast<unsigned char>(avail[w] & ~bit);
            int nb = Buckets::index_for(std::popcount(static_cast<unsigned>(avail[w])));
            if (nb != buckets.which[w]) {
                buckets.erase(w);
                buckets.push_back(nb, w);
            }
        }
    }
    return {ThreeColorVerdict::colored, make_coloring(std::move(color))};
}

ThreeColorResult three_color_checked(const Graph& g) {
    if (g.n == 0) raise(errc::bad_argument, "three_color_checked: empty graph");
    if (!is_connected(g)) raise(errc::disconnected, "three_color_checked requires a connected graph");
    if (!blocks_locally_connected(g)) return {ThreeColorVerdict::not_applicable, std::nullopt};
    return three_color(g);
}

bool validate_coloring(const Graph& g, const Coloring& c, int k) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int x : c.color)
        if (x < 1 || x > k) return false;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u])
            if (u < v && c.color[u] == c.color[v]) return false;
    return true;
}

std::optional<Coloring> two_color(const Graph& g) {
    if (g.n == 0) raise(errc::bad_argument, "two_color: empty graph");
    if (!is_connected(g)) raise(errc::disconnected, "two_color requires a connected graph");
    std::vector<int> color(g.n, 0);
    std::deque<Vertex> queue{0};
    color[0] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.adj[v]) {
            if (color[w] == 0) {
                color[w] = 3 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    return make_coloring(std::move(color));
}

} // namespace dc
