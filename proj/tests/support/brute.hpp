#pragma once

// Slow reference implementations used only by tests. None of them calls the
// library routine it is meant to check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cvpg/graph.hpp"

namespace cvpg::testkit {

// Lexicographically least injective map pattern -> host realizing pattern as
// an induced subgraph, by trying maps in lex order.
std::optional<std::vector<Vertex>> brute_lex_least_induced(const Graph& host, const Graph& pattern);
bool brute_has_induced(const Graph& host, const Graph& pattern);

// All maximal cliques by subset enumeration (n <= 12). Sorted sets, sorted list.
std::vector<VertexSet> brute_maximal_cliques(const Graph& g);

// No induced cycle of length >= 4, by subset enumeration.
bool brute_is_chordal(const Graph& g);
bool brute_is_induced_cycle(const Graph& g, const std::vector<Vertex>& cyc);

bool brute_is_p4_tidy(const Graph& g);
bool brute_is_p5_free(const Graph& g);

// Canonical codes of all tree-cographs on n vertices for n <= max_n, built as
// the closure of trees under disjoint union and complement. Index by n.
std::vector<std::set<std::uint64_t>> tree_cograph_codes(int max_n);

// Spanning tree shape string (AHU) for trees; equal iff isomorphic.
std::string tree_canon(const Graph& t);
// All trees on n vertices up to isomorphism.
std::vector<Graph> nonisomorphic_trees(int n);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
Graph random_graph(int n, double p, std::mt19937& rng);
// Chordal by construction: each new vertex is joined to a clique of size at
// most max_attach inside the neighbourhood of a random earlier vertex.
Graph random_chordal(int n, int max_attach, std::mt19937& rng);

int max_degree(const Graph& g);
Graph delete_vertex(const Graph& g, Vertex v);

}  // namespace cvpg::testkit
