#pragma once

#include <vector>

#include "cvpg/class_contact.hpp"
#include "cvpg/decision.hpp"
#include "cvpg/graph.hpp"
#include "cvpg/grid_rep.hpp"

namespace cvpg {

// Every builder validates its output and throws std::logic_error if the
// result is not a representation of the input. Outputs are normalized to
// start at (0,0).

// Throws std::invalid_argument if t is not a tree.
GridRepresentation represent_tree(const Graph& t);

// Block-cut tree layout. Each vertex is given a role per block (ends at the
// block's contact point, or passes through it) with at most two ends per
// vertex, then blocks are hung along each path in disjoint column ranges.
// Throws std::domain_error if g is not chordal or not contact B0-VPG.
GridRepresentation represent_chordal(const Graph& g);

// K_{2,m}: the two-vertex side as columns, the others as rows between them.
GridRepresentation represent_k2m(const Graph& g);

GridRepresentation represent_tree_cograph(const Graph& g, const TreeCographNode& root);
GridRepresentation represent_spider(const Graph& g, const SpiderPartition& sp);
GridRepresentation represent_fat_spider(const Graph& g, const FatSpider& fs);
GridRepresentation represent_w(const Graph& g, const WStructure& ws);
GridRepresentation represent_l(const Graph& g, const LStructure& ls);

// Full pipeline: decide, then build with the construction for the class.
// Throws std::domain_error if g is outside the class or not contact B0-VPG.
GridRepresentation represent_contact(const Graph& g, GraphClass hint = GraphClass::Auto);

// ---- family generators ------------------------------------------------------

// S = 0..k-1, C = k..2k-1 (s_i matched with c_i = k+i), R = 2k.. (copy of r).
Graph make_thin_spider(int k, const Graph& r = Graph());
Graph make_thick_spider(int k, const Graph& r = Graph());

// Thin spider plus a twin (appended as the last vertex) of s_index (in_c
// false) or c_index (in_c true).
Graph make_fat_spider(int k, int index, bool in_c, bool true_twin, const Graph& r = Graph());

// a1=0, b1=1, a2=2, b2=3, then S_a, S_b, the K_a cliques, the K_b cliques,
// then K_ab. Clique sizes in ka/kb are 1..3 (the hub completes them).
struct WParams {
    int sa = 0;
    int sb = 0;
    std::vector<int> ka;
    std::vector<int> kb;
    int kab = 0;
};
Graph make_w1(const WParams& p);

// a=0, v=1, b=2, c=3, w=4, then S_v, S_w, then (L2/L3) u, the K_u cliques,
// then (L3) z.
struct LParams {
    int variant = 1;  // 1, 2 or 3
    int sv = 0;
    int sw = 0;
    std::vector<int> ku;
};
Graph make_l(const LParams& p);

}  // namespace cvpg
