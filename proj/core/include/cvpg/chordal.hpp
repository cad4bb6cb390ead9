#pragma once

#include <vector>

#include "cvpg/graph.hpp"

namespace cvpg {

// Elimination order: position 0 is eliminated first.
using EliminationOrder = std::vector<Vertex>;

// Maximum cardinality search. The returned order is the reverse of the visit
// order, so it is a perfect elimination order iff g is chordal.
EliminationOrder maximum_cardinality_search(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);

struct ChordalityResult {
    bool chordal = true;
    // Induced cycle of length >= 4 in cyclic order; empty when chordal.
    std::vector<Vertex> hole;
};

ChordalityResult check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

// Sorted cliques, list in lexicographic order. Throws std::domain_error when g
// is not chordal.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);
int clique_number_chordal(const Graph& g);

struct BlockDecomposition {
    // Maximal 2-connected pieces and bridges, plus a singleton block for each
    // isolated vertex. Sorted, list in lexicographic order.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    // Nodes 0..blocks.size()-1 are blocks; node blocks.size()+i is
    // cut_vertices[i]. A block is joined to each cut vertex it contains.
    Graph block_cut_tree;
};

BlockDecomposition block_decomposition(const Graph& g);

// Chordal and no edge lies in two maximal cliques; equivalently every block is
// a clique.
bool is_block_graph(const Graph& g);

}  // namespace cvpg
