#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvpg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted ascending, no duplicates. This is the canonical form used in every
// witness and structure the library reports.
using VertexSet = std::vector<Vertex>;

class GraphBuilder;

// Immutable once built. Neighbor lists are kept sorted so that adjacency is a
// binary search and iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    // All edges as (u,v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Accumulates edges, then freezes them into a Graph. Duplicate edges are
// merged; self-loops and out-of-range endpoints throw std::invalid_argument.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& add_clique(std::span<const Vertex> vs);
    int order() const { return n_; }

    Graph build() const;

private:
    int n_;
    std::vector<std::vector<Vertex>> adj_;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

// Vertices of the result are 0..|S|-1 in the order given by `s` (which need
// not be sorted); position i of `s` is the relabeling map for vertex i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph complement(const Graph& g);

// Each component sorted; the list sorted by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

bool is_tree(const Graph& g);

// Closed neighborhood of a vertex set.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);

// Standard small graphs, vertices numbered along the natural order.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1

// Minimum adjacency bitmask over all vertex permutations; two graphs on the
// same number of vertices are isomorphic iff their codes agree. Intended for
// desk-scale enumeration only: throws std::invalid_argument when n > 8.
std::uint64_t canonical_code(const Graph& g);

// Adjacency bitmask of g in its own labeling, using the same bit layout as
// canonical_code (bit index of pair (i,j), i<j, is j*(j-1)/2 + i).
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace cvpg
