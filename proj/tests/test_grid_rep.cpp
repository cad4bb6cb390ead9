#include <gtest/gtest.h>

#include "brute.hpp"
#include "corpus.hpp"
#include "cvpg/builders.hpp"
#include "cvpg/grid_rep.hpp"
#include "cvpg/oracle.hpp"
#include "cvpg/patterns.hpp"

using namespace cvpg;

namespace {

PathSeg H(int row, int lo, int hi) { return {Orientation::Horizontal, row, lo, hi}; }
PathSeg V(int col, int lo, int hi) { return {Orientation::Vertical, col, lo, hi}; }

GridRepresentation k4_star() { return {{H(0, 0, 1), H(0, -1, 0), V(0, 0, 1), V(0, -1, 0)}}; }

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
    for (const auto& v : vs)
        if (v.rule == rule) return true;
    return false;
}

void expect_good(const Graph& g, const GridRepresentation& rep, const std::string& name) {
    auto vs = validate(g, rep);
    EXPECT_TRUE(vs.empty()) << name << ": " << (vs.empty() ? "" : vs.front().rule + " " + vs.front().message);
    auto b = bounding_box(rep);
    EXPECT_LE(b.columns(), 4 * std::max(1, g.order())) << name;
    EXPECT_LE(b.rows(), 4 * std::max(1, g.order())) << name;
    EXPECT_EQ(b.min_x, 0) << name;
    EXPECT_EQ(b.min_y, 0) << name;
}

// Every contact point is an endpoint of at least one of the two paths.
void expect_contacts_at_ends(const GridRepresentation& rep) {
    for (Vertex v = 0; v < rep.order(); ++v)
        for (const auto& c : contacts(rep, v))
            EXPECT_TRUE(ends_at(rep, v, c.at) || ends_at(rep, c.other, c.at));
}

Graph two_k4_sharing_vertex() {
    GraphBuilder b(7);
    b.add_clique(std::vector<Vertex>{0, 1, 2, 3}).add_clique(std::vector<Vertex>{0, 4, 5, 6});
    return b.build();
}

}  // namespace

TEST(Validate, CornerContactOfK2) {
    GridRepresentation r{{H(0, 0, 1), V(1, 0, 1)}};
    EXPECT_TRUE(is_valid(complete_graph(2), r));
    EXPECT_TRUE(has_rule(validate(Graph(2), r), "extra-contact"));
}

TEST(Validate, Crossing) {
    GridRepresentation r{{H(1, 0, 2), V(1, 0, 2)}};
    EXPECT_TRUE(has_rule(validate(complete_graph(2), r), "crossing"));
}

TEST(Validate, TContact) {
    GridRepresentation r{{H(0, 0, 2), V(1, 0, 1)}};
    EXPECT_TRUE(is_valid(complete_graph(2), r));
    auto mid = middle_contacts(r, 0);
    ASSERT_EQ(mid.size(), 1u);
    EXPECT_EQ(mid[0].other, 1);
    EXPECT_EQ(mid[0].at, (GridPoint{1, 0}));
    EXPECT_TRUE(middle_contacts(r, 1).empty());
}

TEST(Validate, SharedEdgeAndMissingContact) {
    GridRepresentation overlap{{H(0, 0, 2), H(0, 1, 3)}};
    EXPECT_TRUE(has_rule(validate(complete_graph(2), overlap), "edge-sharing"));
    GridRepresentation apart{{H(0, 0, 1), H(2, 0, 1)}};
    EXPECT_TRUE(has_rule(validate(complete_graph(2), apart), "missing-contact"));
    EXPECT_TRUE(is_valid(Graph(2), apart));
    GridRepresentation degenerate{{H(0, 1, 1)}};
    EXPECT_TRUE(has_rule(validate(Graph(1), degenerate), "segment"));
    EXPECT_TRUE(has_rule(validate(Graph(2), GridRepresentation{{H(0, 0, 1)}}), "order"));
}

TEST(Validate, K4Star) {
    auto r = k4_star();
    EXPECT_TRUE(is_valid(complete_graph(4), r));
    for (Vertex v = 0; v < 4; ++v) {
        EXPECT_TRUE(ends_at(r, v, {0, 0}));
        EXPECT_EQ(contacts(r, v).size(), 3u);
    }
    EXPECT_FALSE(ends_at(r, 0, {1, 1}));
}

TEST(ContactPoint, Cases) {
    bool ov = false;
    EXPECT_EQ(contact_point(H(0, 0, 1), H(0, 1, 2), &ov), (GridPoint{1, 0}));
    EXPECT_FALSE(ov);
    EXPECT_FALSE(contact_point(H(0, 0, 2), H(0, 1, 3), &ov).has_value());
    EXPECT_TRUE(ov);
    EXPECT_FALSE(contact_point(H(0, 0, 1), V(3, 0, 1)).has_value());
}

TEST(Compose, SideBySide) {
    auto k4 = k4_star();
    std::vector<GridRepresentation> parts{k4, GridRepresentation{}, GridRepresentation{{H(5, 2, 3)}}};
    auto r = compose_side_by_side(parts);
    ASSERT_EQ(r.order(), 5);
    EXPECT_TRUE(is_valid(disjoint_union(complete_graph(4), complete_graph(1)), r));
    // One empty column separates the boxes.
    EXPECT_EQ(r.paths[4].lo, 4);
    EXPECT_TRUE(compose_side_by_side(std::vector<GridRepresentation>{}).paths.empty());
}

TEST(Refine, InsertsEmptyLine) {
    auto r = refine(k4_star(), Axis::Column, 0);
    EXPECT_EQ(r.paths[0], H(0, 0, 2));
    EXPECT_EQ(r.paths[1], H(0, -1, 0));
    EXPECT_TRUE(is_valid(complete_graph(4), r));
    auto rr = refine(k4_star(), Axis::Row, -1);
    EXPECT_EQ(rr.paths[2], V(0, 1, 2));
    EXPECT_TRUE(is_valid(complete_graph(4), rr));
}

TEST(SplitMerge, RoundTrip) {
    GridRepresentation r{{H(0, 0, 4), V(2, 0, 2)}};
    auto s = split_path(r, 0, {2, 0});
    ASSERT_EQ(s.order(), 3);
    EXPECT_EQ(s.paths[0], H(0, 0, 2));
    EXPECT_EQ(s.paths[2], H(0, 2, 4));
    EXPECT_EQ(merge_last_path(s, 0), r);
    EXPECT_THROW(split_path(r, 0, {0, 0}), std::invalid_argument);
    EXPECT_THROW(split_path(r, 0, {2, 1}), std::invalid_argument);
    EXPECT_THROW(merge_last_path(r, 0), std::invalid_argument);
}

TEST(Compressed, PreservesValidity) {
    GridRepresentation r{{H(10, 0, 40), V(20, 10, 30), V(40, -5, 10)}};
    Graph p3 = graph_from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}});
    ASSERT_TRUE(is_valid(p3, r));
    auto c = compressed(r);
    EXPECT_TRUE(is_valid(p3, c));
    auto b = bounding_box(c);
    EXPECT_EQ(b.columns(), 3);
    EXPECT_EQ(b.rows(), 3);
    EXPECT_EQ(normalized(r).paths[2], V(40, 0, 15));
}

TEST(Builders, Examples) {
    expect_good(star_graph(3), represent_tree(star_graph(3)), "K1,3");
    expect_good(path_graph(5), represent_tree(path_graph(5)), "P5");
    expect_good(Graph(1), represent_tree(Graph(1)), "K1");
    EXPECT_THROW(represent_tree(cycle_graph(3)), std::invalid_argument);
    expect_good(star_graph(7), represent_tree(star_graph(7)), "K1,7");
    expect_good(two_k4_sharing_vertex(), represent_chordal(two_k4_sharing_vertex()), "2K4");
    Graph gp2 = make_pattern(PatternId::GP2);
    for (Vertex v = 0; v < gp2.order(); ++v) {
        Graph h = testkit::delete_vertex(gp2, v);
        expect_good(h, represent_chordal(h), "GP2 minus vertex");
    }
    EXPECT_THROW(represent_chordal(gp2), std::domain_error);
    expect_good(complete_bipartite(2, 3), represent_k2m(complete_bipartite(2, 3)), "K2,3");
    Graph t4 = make_thin_spider(4);
    expect_good(t4, represent_spider(t4, *spider_partition(t4)), "thin 4");
    expect_good(t4, represent_contact(t4), "thin 4 pipeline");
    Graph b3 = make_pattern(PatternId::B3);
    expect_good(b3, represent_w(b3, extract_W_structure(b3)), "B3");
    expect_good(cycle_graph(5), represent_contact(cycle_graph(5)), "C5");
    EXPECT_THROW(represent_contact(make_pattern(PatternId::K33)), std::domain_error);
}

TEST(Builders, CorporaAreValidAndSmall) {
    int built = 0;
    auto run = [&](const std::vector<testkit::Instance>& corpus) {
        for (const auto& inst : corpus) {
            if (decide_contact(inst.graph).verdict != Verdict::Yes) continue;
            auto rep = represent_contact(inst.graph);
            expect_good(inst.graph, rep, inst.name);
            expect_contacts_at_ends(rep);
            ++built;
        }
    };
    run(testkit::tree_corpus(10));
    run(testkit::spider_corpus());
    run(testkit::fat_spider_corpus());
    run(testkit::w1_corpus());
    run(testkit::l_corpus());
    run(testkit::k2m_corpus(12));
    EXPECT_GT(built, 500);
}

TEST(Builders, RandomChordal) {
    std::mt19937 rng(31);
    int yes = 0;
    for (int it = 0; it < 400; ++it) {
        Graph g = testkit::random_chordal(3 + static_cast<int>(rng() % 14), 3, rng);
        if (decide_contact(g).verdict != Verdict::Yes) continue;
        ++yes;
        auto rep = represent_chordal(g);
        expect_good(g, rep, "random chordal");
        expect_contacts_at_ends(rep);
    }
    EXPECT_GT(yes, 50);
}

TEST(OracleOutputs, K4PathsEndAtTheirCommonPoint) {
    // In any representation the four paths of a K4 share one point, and each
    // ends there.
    for (const Graph& g : {complete_graph(4), two_k4_sharing_vertex(), make_thin_spider(2, complete_graph(2))}) {
        auto res = search_representation(g);
        ASSERT_EQ(res.verdict, OracleVerdict::Yes);
        const auto& rep = *res.rep;
        expect_contacts_at_ends(rep);
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b : g.neighbors(a))
                for (Vertex c : g.neighbors(a))
                    for (Vertex d : g.neighbors(a)) {
                        if (!(a < b && b < c && c < d) || !g.adjacent(b, c) || !g.adjacent(b, d) || !g.adjacent(c, d))
                            continue;
                        auto p = contact_point(rep.paths[static_cast<std::size_t>(a)], rep.paths[static_cast<std::size_t>(b)]);
                        ASSERT_TRUE(p);
                        for (Vertex v : {a, b, c, d}) EXPECT_TRUE(ends_at(rep, v, *p));
                    }
    }
}
