#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvpg/decision.hpp"
#include "cvpg/graph.hpp"

namespace cvpg {

// ---- tree-cographs ------------------------------------------------------

struct TreeCographNode {
    enum class Kind { LeafTree, LeafCotree, Union, Join };
    Kind kind = Kind::LeafTree;
    VertexSet vertices;  // original ids covered by this node
    std::vector<TreeCographNode> children;
};

// Decomposition tried in the order: tree, disconnected (union), co-
// disconnected (join), complement of a tree. nullopt if g is not a
// tree-cograph.
std::optional<TreeCographNode> tree_cograph_decomposition(const Graph& g);
bool is_tree_cograph(const Graph& g);

// ---- P4-tidy / P5-free ----------------------------------------------------

bool induces_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);
// Definition check: every induced-P4 vertex set has at most one partner.
bool is_p4_tidy(const Graph& g);
// Least induced P5 (as a path a-b-c-d-e), or nullopt.
std::optional<std::vector<Vertex>> find_p5(const Graph& g);
bool is_p5_free(const Graph& g);

// ---- spiders --------------------------------------------------------------

enum class SpiderKind { Thin, Thick };

struct SpiderPartition {
    // s[i] is matched with c[i]: adjacent iff i == j (thin) or i != j (thick).
    std::vector<Vertex> s;
    std::vector<Vertex> c;
    VertexSet r;
    SpiderKind kind = SpiderKind::Thin;
    int k() const { return static_cast<int>(s.size()); }
};

// Thin is tried first, so k = 2 spiders (which are both) report Thin.
std::optional<SpiderPartition> spider_partition(const Graph& g);

struct FatSpider {
    SpiderPartition base;  // partition of g minus `twin`, original ids
    Vertex twin = -1;      // the added vertex
    Vertex of = -1;        // the vertex of S or C it duplicates
    bool true_twin = false;
};

// g is a spider plus one true or false twin of a vertex of S or C, and g is
// not itself a spider.
std::optional<FatSpider> fat_spider_partition(const Graph& g);

// ---- C4 / C5 anchored structures -------------------------------------------

struct WStructure {
    std::string tag;  // "W1", "B1", "B2", "B3"
    Vertex a1 = -1, b1 = -1, a2 = -1, b2 = -1;
    VertexSet sa, sb, ka, kb, kab;
    // For B tags: map[i] is the host vertex of pattern vertex i (see
    // make_pattern for the labelling).
    std::vector<Vertex> map;
};

struct LStructure {
    std::string tag;  // "L1", "L2", "L3"
    Vertex a = -1, v = -1, b = -1, c = -1, w = -1;
    VertexSet sv, sw, ku;
    Vertex u = -1;
    Vertex z = -1;
};

// g connected, non-chordal, C5-free and contact. Tries every induced C4 and
// each of its labellings. Throws std::logic_error if no anchor fits.
WStructure extract_W_structure(const Graph& g);
// g connected, contains an induced C5 and contact. Throws std::logic_error if
// no anchor fits.
LStructure extract_L_structure(const Graph& g);

// Exact membership checks for a given anchor labelling.
std::optional<WStructure> w_structure_at(const Graph& g, Vertex a1, Vertex b1, Vertex a2, Vertex b2);
std::optional<LStructure> l_structure_at(const Graph& g, Vertex a, Vertex v, Vertex b, Vertex c, Vertex w);

// ---- decisions --------------------------------------------------------------

// Forbidden sets used by decide_contact.
std::vector<PatternId> cograph_forbidden();  // K5, K3,3, H0, K4-e
std::vector<PatternId> p5_free_forbidden();  // the twelve graphs for P5-free inputs

// First matching class in the order chordal, tree-cograph, P4-tidy, P5-free.
std::optional<GraphClass> detect_class(const Graph& g);
bool in_class(const Graph& g, GraphClass c);

// Decides contact B0-VPG membership within the named class. Throws
// std::domain_error when g is not in that class (or, for Auto, in none).
Decision decide_contact(const Graph& g, GraphClass hint = GraphClass::Auto);

}  // namespace cvpg
