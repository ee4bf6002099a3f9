#include <doctest.h>

#include "dc/coloring.hpp"
#include "dc/generators.hpp"
#include "dc/oracle.hpp"
#include "dc/structure.hpp"
#include "support/enumerate.hpp"
#include "support/graphs.hpp"

#include <array>
#include <bit>

using namespace dc;
using namespace dc::testsupport;

namespace {

bool same_up_to_color_names(const Coloring& a, const Coloring& b) {
    if (a.color.size() != b.color.size()) return false;
    std::array<int, 4> map{0, 0, 0, 0};
    for (size_t v = 0; v < a.color.size(); ++v) {
        int ca = a.color[v], cb = b.color[v];
        if (ca < 1 || ca > 3 || cb < 1 || cb > 3) return false;
        if (map[static_cast<size_t>(ca)] == 0)
            map[static_cast<size_t>(ca)] = cb;
        else if (map[static_cast<size_t>(ca)] != cb)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("triangle gets all three colours in tie-break order") {
    auto res = three_color(complete_graph(3));
    REQUIRE(res.verdict == ThreeColorVerdict::colored);
    CHECK(res.coloring->color == std::vector<int>{1, 2, 3});
    CHECK(res.coloring->k == 3);
}

TEST_CASE("K4 is not 3-colourable") {
    CHECK(three_color(complete_graph(4)).verdict == ThreeColorVerdict::not_three_colorable);
    CHECK(three_color_checked(complete_graph(4)).verdict ==
          ThreeColorVerdict::not_three_colorable);
}

TEST_CASE("odd wheel is rejected, even wheel is coloured") {
    CHECK(!brute_force_k_colorable(wheel_graph(5), 3));
    CHECK(three_color(wheel_graph(5)).verdict == ThreeColorVerdict::not_three_colorable);

    CHECK(brute_force_k_colorable(wheel_graph(4), 3));
    auto res = three_color(wheel_graph(4));
    REQUIRE(res.verdict == ThreeColorVerdict::colored);
    CHECK(validate_coloring(wheel_graph(4), *res.coloring, 3));
    // hub keeps a colour of its own, the rim alternates between the other two
    const auto& c = res.coloring->color;
    for (int v = 0; v < 4; ++v) CHECK(c[v] != c[4]);
    CHECK(c[0] == c[2]);
    CHECK(c[1] == c[3]);
}

TEST_CASE("checked colouring reports non-applicable inputs") {
    CHECK(three_color_checked(cycle_graph(6)).verdict == ThreeColorVerdict::not_applicable);
    auto res = three_color_checked(bowtie_graph());
    REQUIRE(res.verdict == ThreeColorVerdict::colored);
    CHECK(validate_coloring(bowtie_graph(), *res.coloring, 3));
    CHECK(brute_force_k_colorable(bowtie_graph(), 3));
}

TEST_CASE("disconnected input is a distinct error") {
    try {
        (void)three_color(from_edges(4, {{0, 1}, {2, 3}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::disconnected);
    }
    CHECK_THROWS_AS((void)three_color_checked(from_edges(2, {})), Error);
}

TEST_CASE("validate_coloring examples") {
    Coloring good = make_coloring({1, 2, 3});
    Coloring bad = make_coloring({1, 1, 2});
    CHECK(validate_coloring(complete_graph(3), good, 3));
    CHECK(!validate_coloring(complete_graph(3), bad, 3));
    CHECK(validate_coloring(path_graph(3), make_coloring({1, 2, 1}), 2));
    CHECK(!validate_coloring(path_graph(3), make_coloring({1, 2, 3}), 2)); // colour above k
}

TEST_CASE("two_color finds bipartitions exactly on odd-cycle-free graphs") {
    CHECK(two_color(path_graph(4)));
    CHECK(!two_color(complete_graph(3)));
    CHECK(two_color(cycle_graph(6)));
    CHECK(!two_color(cycle_graph(5)));
    auto res = two_color(cycle_graph(8));
    REQUIRE(res);
    CHECK(validate_coloring(cycle_graph(8), *res, 2));
}

TEST_CASE("colouring agrees with the oracle on every small applicable graph") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs_exactly(n)) {
            if (!blocks_locally_connected(g)) continue;
            auto res = three_color(g);
            bool oracle = brute_force_k_colorable(g, 3).has_value();
            CHECK((res.verdict == ThreeColorVerdict::colored) == oracle);
            if (res.coloring) CHECK(validate_coloring(g, *res.coloring, 3));
        }
}

TEST_CASE("a returned colouring is proper even outside the contract") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : connected_graphs_exactly(n)) {
            auto res = three_color(g);
            if (res.coloring) CHECK(validate_coloring(g, *res.coloring, 3));
        }
}

TEST_CASE("selection follows the bucket discipline, validated by a shadow recount") {
    // The <=1 sizes share one bucket, so the popped vertex minimises the
    // bucket class min(|avail|, 1)..3 rather than the raw count.
    auto bucket_class = [](int avail) { return avail <= 1 ? 0 : avail - 1; };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec{10, 0.4, 500 + seed, Family::connected_random};
        Graph g = gen_connected_random(spec);
        std::vector<int> shadow_color(static_cast<size_t>(g.n), 0);
        bool counts_ok = true, discipline_ok = true;
        (void)three_color(g, nullptr, [&](Vertex v, int avail, int lowest) {
            // recount v's available colours from the shadow colouring
            unsigned mask = 0b111;
            for (Vertex w : g.adj[v])
                if (shadow_color[static_cast<size_t>(w)] != 0)
                    mask &= ~(1u << (shadow_color[static_cast<size_t>(w)] - 1));
            int recount = std::popcount(mask);
            if (recount != avail) counts_ok = false;
            if (bucket_class(avail) != bucket_class(lowest)) discipline_ok = false;
            if (mask != 0) shadow_color[static_cast<size_t>(v)] = std::countr_zero(mask) + 1;
        });
        CHECK(counts_ok);
        CHECK(discipline_ok);
    }
}

TEST_CASE("random intra-bucket tie-breaking changes nothing up to colour names") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 meta = SplitMix64::stream(31337, seed);
        SplitMix64 attach = SplitMix64::stream(seed, 10);
        SplitMix64 chords = SplitMix64::stream(seed, 11);
        int n = 3 + static_cast<int>(meta.bounded(20));
        Graph g = grow_locally_connected_block(n, meta.unit(), attach, chords);
        REQUIRE(is_locally_connected(g).ok);
        auto base = three_color(g);
        for (int rep = 0; rep < 3; ++rep) {
            SplitMix64 tie(meta.next());
            auto shuffled = three_color(g, &tie);
            CHECK(shuffled.verdict == base.verdict);
            if (base.coloring && shuffled.coloring)
                CHECK(same_up_to_color_names(*base.coloring, *shuffled.coloring));
        }
    }
}
