#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "cvpg/chordal.hpp"
#include "cvpg/patterns.hpp"

using namespace cvpg;

namespace {

Graph two_k4_sharing_vertex() {
    GraphBuilder b(7);
    b.add_clique(std::vector<Vertex>{0, 1, 2, 3}).add_clique(std::vector<Vertex>{0, 4, 5, 6});
    return b.build();
}

}  // namespace

TEST(Mcs, Examples) {
    auto k3 = maximum_cardinality_search(complete_graph(3));
    EXPECT_TRUE(is_perfect_elimination_order(complete_graph(3), k3));
    EXPECT_FALSE(is_perfect_elimination_order(cycle_graph(4), maximum_cardinality_search(cycle_graph(4))));
    auto p4 = maximum_cardinality_search(path_graph(4));
    EXPECT_TRUE(is_perfect_elimination_order(path_graph(4), p4));
    // A leaf is eliminated first.
    EXPECT_TRUE(p4.front() == 0 || p4.front() == 3);
}

TEST(IsChordal, Examples) {
    auto c5 = check_chordal(cycle_graph(5));
    EXPECT_FALSE(c5.chordal);
    EXPECT_EQ(c5.hole.size(), 5u);
    EXPECT_TRUE(testkit::brute_is_induced_cycle(cycle_graph(5), c5.hole));
    EXPECT_TRUE(is_chordal(path_graph(7)));
    EXPECT_TRUE(is_chordal(star_graph(5)));
    EXPECT_TRUE(is_chordal(make_pattern(PatternId::K4MinusE)));
}

TEST(IsChordal, AgreesWithBruteForceAndHolesAreInduced) {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = graph_from_code(n, code);
            auto r = check_chordal(g);
            ASSERT_EQ(r.chordal, testkit::brute_is_chordal(g)) << n << ":" << code;
            if (!r.chordal) {
                ASSERT_GE(r.hole.size(), 4u);
                ASSERT_TRUE(testkit::brute_is_induced_cycle(g, r.hole)) << n << ":" << code;
            }
        }
    }
}

TEST(MaximalCliques, Examples) {
    EXPECT_EQ(maximal_cliques_chordal(complete_graph(4)), (std::vector<VertexSet>{{0, 1, 2, 3}}));
    EXPECT_EQ(maximal_cliques_chordal(path_graph(3)), (std::vector<VertexSet>{{0, 1}, {1, 2}}));
    auto two = maximal_cliques_chordal(two_k4_sharing_vertex());
    EXPECT_EQ(two, (std::vector<VertexSet>{{0, 1, 2, 3}, {0, 4, 5, 6}}));
    EXPECT_THROW(maximal_cliques_chordal(cycle_graph(4)), std::domain_error);
}

TEST(MaximalCliques, AgreeWithBruteForce) {
    std::mt19937 rng(3);
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = graph_from_code(n, code);
            if (!is_chordal(g)) continue;
            auto cl = maximal_cliques_chordal(g);
            ASSERT_EQ(cl, testkit::brute_maximal_cliques(g));
            ASSERT_LE(static_cast<int>(cl.size()), n);
        }
    }
    for (int it = 0; it < 300; ++it) {
        Graph g = testkit::random_chordal(7 + static_cast<int>(rng() % 4), 4, rng);
        ASSERT_EQ(maximal_cliques_chordal(g), testkit::brute_maximal_cliques(g));
    }
}

TEST(CliqueNumber, Examples) {
    EXPECT_EQ(clique_number_chordal(complete_graph(5)), 5);
    EXPECT_THROW(clique_number_chordal(cycle_graph(4)), std::domain_error);
    EXPECT_EQ(clique_number_chordal(make_pattern(PatternId::H0)), 4);
}

TEST(BlockDecomposition, Examples) {
    Graph h0 = make_pattern(PatternId::H0);
    EXPECT_TRUE(is_block_graph(h0));
    auto bd = block_decomposition(h0);
    EXPECT_EQ(bd.blocks.size(), 3u);
    EXPECT_EQ(bd.cut_vertices, (VertexSet{0}));
    EXPECT_FALSE(is_block_graph(make_pattern(PatternId::K4MinusE)));
    Graph t = path_graph(5);
    EXPECT_TRUE(is_block_graph(t));
    auto tb = block_decomposition(t);
    EXPECT_EQ(tb.blocks, (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    EXPECT_EQ(tb.cut_vertices, (VertexSet{1, 2, 3}));
}

TEST(BlockDecomposition, Invariants) {
    std::mt19937 rng(17);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testkit::random_graph(n, 0.3, rng);
        auto bd = block_decomposition(g);
        // Every edge lies in exactly one block; blocks share at most one vertex.
        for (auto [u, v] : g.edges()) {
            int c = 0;
            for (auto& b : bd.blocks)
                c += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
            EXPECT_EQ(c, 1);
        }
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                VertexSet common;
                std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(), bd.blocks[j].begin(),
                                      bd.blocks[j].end(), std::back_inserter(common));
                EXPECT_LE(common.size(), 1u);
            }
        // The block-cut forest has one tree per component.
        const auto& t = bd.block_cut_tree;
        EXPECT_EQ(t.size() + connected_components(g).size(), static_cast<std::size_t>(t.order()));
        EXPECT_EQ(connected_components(t).size(), connected_components(g).size());
    }
}

TEST(BlockGraph, ChordalAndNoK4MinusE) {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = graph_from_code(n, code);
            ASSERT_EQ(is_block_graph(g), is_chordal(g) && !find_k4_minus_e(g).has_value()) << n << ":" << code;
        }
    }
}
