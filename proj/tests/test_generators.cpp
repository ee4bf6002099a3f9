#include <doctest.h>

#include "dc/coloring.hpp"
#include "dc/generators.hpp"
#include "dc/oracle.hpp"
#include "dc/recognition.hpp"
#include "dc/structure.hpp"
#include "support/graphs.hpp"

using namespace dc;
using namespace dc::testsupport;

TEST_CASE("add_universal_vertex basics") {
    Graph k4 = add_universal_vertex(complete_graph(3));
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);

    Graph w5 = add_universal_vertex(cycle_graph(5));
    CHECK(w5.n == 6);
    CHECK(w5.degree(5) == 5);
    CHECK(chromatic_number(w5) == 4);

    Graph star = add_universal_vertex(from_edges(3, {}));
    CHECK(star.n == 4);
    CHECK(star.m == 3);
}

TEST_CASE("the universal-vertex reduction preserves colourability shifted by one") {
    CHECK(brute_force_k_colorable(reduce_3col_to_4col(complete_graph(3)), 4));
    CHECK(!brute_force_k_colorable(reduce_3col_to_4col(complete_graph(4)), 4));
    Graph w5 = reduce_3col_to_4col(cycle_graph(5));
    CHECK(brute_force_k_colorable(cycle_graph(5), 3));
    CHECK(brute_force_k_colorable(w5, 4));
    CHECK(!brute_force_k_colorable(w5, 3));
}

TEST_CASE("identical specs generate identical graphs") {
    for (Family family : {Family::dually_chordal, Family::k4_free_dually_chordal,
                          Family::locally_connected_blocks, Family::connected_random}) {
        GenSpec spec{11, 0.5, 987654321, family};
        Graph a = generate(spec);
        Graph b = generate(spec);
        CHECK(a.edges() == b.edges());
        GenSpec other = spec;
        other.seed += 1;
        // a different seed virtually always moves at least one edge
        Graph c = generate(other);
        CHECK((c.edges() != a.edges() || c.m == a.m));
    }
}

TEST_CASE("density 0 yields the bare spanning tree and trees are recognised") {
    GenSpec spec{12, 0.0, 5, Family::dually_chordal};
    Graph g = gen_dually_chordal(spec);
    CHECK(g.m == g.n - 1);
    CHECK(find_mno(g));
}

TEST_CASE("density 1 reaches the path-saturation closure") {
    GenSpec spec{8, 1.0, 77, Family::dually_chordal};
    auto gen = gen_dually_chordal_with_tree(spec);
    const Graph& g = gen.graph;
    // no remaining non-edge has its whole tree-path interior saturated
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            bool saturated = true;
            for (Vertex w : tree_path_interior(gen.tree, u, v))
                if (!g.has_edge(u, w) || !g.has_edge(v, w)) saturated = false;
            CHECK(!saturated);
        }
}

TEST_CASE("generated dually chordal graphs carry their witness tree") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec{static_cast<int>(2 + seed % 12), 0.6, 4400 + seed, Family::dually_chordal};
        auto gen = gen_dually_chordal_with_tree(spec);
        CHECK(verify_path_condition(gen.graph, gen.tree));
        CHECK(find_mno(gen.graph));
    }
}

TEST_CASE("k4-free family postconditions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec{static_cast<int>(2 + seed % 12), 0.8, 5500 + seed,
                     Family::k4_free_dually_chordal};
        Graph g = gen_k4_free_dually_chordal(spec);
        CHECK(!find_k4(g));
        CHECK(find_mno(g));
    }
    // full saturation on four vertices never closes a K4
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenSpec spec{4, 1.0, seed, Family::k4_free_dually_chordal};
        Graph g = gen_k4_free_dually_chordal(spec);
        CHECK(g.m < 6);
        CHECK(!find_k4(g));
    }
}

TEST_CASE("locally-connected-blocks family postconditions") {
    GenSpec k2{2, 0.0, 1, Family::locally_connected_blocks};
    Graph g2 = gen_locally_connected_blocks(k2);
    CHECK(g2.n == 2);
    CHECK(g2.m == 1);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec{static_cast<int>(2 + seed % 14), 0.5, 6600 + seed,
                     Family::locally_connected_blocks};
        Graph g = gen_locally_connected_blocks(spec);
        CHECK(is_connected(g));
        CHECK(blocks_locally_connected(g));
    }
}

TEST_CASE("grown single blocks are locally connected") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 attach = SplitMix64::stream(seed, 0);
        SplitMix64 chords = SplitMix64::stream(seed, 1);
        Graph g = grow_locally_connected_block(3 + static_cast<int>(seed % 20), 0.4, attach, chords);
        CHECK(is_locally_connected(g).ok);
        CHECK(is_connected(g));
    }
}

TEST_CASE("connected random family spans the density range") {
    GenSpec tree_spec{30, 0.0, 9, Family::connected_random};
    Graph t = gen_connected_random(tree_spec);
    CHECK(t.m == t.n - 1);
    CHECK(is_connected(t));

    GenSpec full{10, 1.0, 9, Family::connected_random};
    Graph k = gen_connected_random(full);
    CHECK(k.m == 45);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec{40, 0.1, 7700 + seed, Family::connected_random};
        CHECK(is_connected(gen_connected_random(spec)));
    }
}

TEST_CASE("generator argument validation") {
    GenSpec bad{5, 1.5, 0, Family::connected_random};
    CHECK_THROWS_AS((void)generate(bad), Error);
    GenSpec tiny{1, 0.5, 0, Family::locally_connected_blocks};
    CHECK_THROWS_AS((void)generate(tiny), Error);
    CHECK(family_from_name("duallyChordal") == Family::dually_chordal);
    CHECK(family_from_name("k4FreeDuallyChordal") == Family::k4_free_dually_chordal);
    CHECK(family_from_name("locallyConnectedBlocks") == Family::locally_connected_blocks);
    CHECK(family_from_name("connectedRandom") == Family::connected_random);
    CHECK(!family_from_name("nonsense"));
    CHECK(family_name(Family::dually_chordal) == "duallyChordal");
}
