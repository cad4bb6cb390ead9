#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvpg/graph.hpp"

namespace cvpg {

enum class PatternId {
    K5,
    K4MinusE,
    K33,
    K33Star,
    CoC6,
    H0,
    B1,
    B2,
    B3,
    G1,
    G2,
    G3,
    G4,
    TMember,
    GP2,
};

// A pattern is a PatternId plus, for TMember only, the base tree.
struct Pattern {
    PatternId id = PatternId::K5;
    Graph base;

    bool operator==(const Pattern&) const = default;
};

// Display name: "K5", "K4-e", "K3,3", "K3,3*", "co-C6", "H0", "B1".."B3",
// "G1".."G4", "G_P2", and "T{0-1,1-2}" (base edge list) for TMember.
std::string pattern_name(const Pattern& p);
std::string pattern_name(PatternId id);
// Accepts display names and a few spellings without punctuation ("K4-e",
// "K4_MINUS_E", "K33", "CO_C6", "GP2", ...). Returns nullopt for TMember.
std::optional<PatternId> parse_pattern_id(std::string_view name);

// Labelled instances. Every labelling lists vertices so that each vertex after
// the first has an earlier neighbour where the pattern is connected; the
// induced-subgraph search relies on this for pruning only, not correctness.
//
//   K4-e   0,1 adjacent hubs; 2,3 nonadjacent tips
//   K3,3   even ids on one side, odd on the other
//   K3,3*  K3,3 with edge 4-5 replaced by 4-6-5
//   co-C6  triangles {0,1,2}, {3,4,5} and matching 0-3, 1-4, 2-5
//   H0     centre 0, K4s {0,1,2,3}, {0,4,5,6}, {0,7,8,9}
//   B1     4-cycle a1=0, b1=1, a2=2, b2=3; v=4 ~ {a1,b1}; w=5 ~ {a2,b2}
//   B2     B1 + v'=6 ~ {a1,b1,v}
//   B3     B2 + w'=7 ~ {a2,b2,w}
//   G*     5-cycle a=0, v=1, b=2, c=3, w=4 (edges a-v-b-c-w-a), then
//     G1   u=5 ~ {a,b,c}; u in K4s {5,6,7,8} and {5,9,10,11}
//     G2   s1=5 ~ {a,b}; s2=6 ~ {a,c}; s1 ~ s2
//     G3   u=5 ~ {a,b,c}; z=6 ~ {v,b,w}
//     G4   u=5 ~ {a,b,c}; z=6 ~ {v,w,u}; u in K4 {5,7,8,9}
//   G_P2   make_T_member(P2)
// Throws std::invalid_argument for TMember (use make_T_member).
Graph make_pattern(PatternId id);

struct TMemberGraph {
    Graph graph;
    // Base tree vertex i is graph vertex i.
    VertexSet base;
};

// Base ids are kept as 0..b-1; then for each base vertex in ascending order,
// 3 - deg(v) K4s are appended, each as three consecutive new vertices.
// Throws std::invalid_argument unless base is a tree with >= 2 vertices and
// maximum degree <= 3.
TMemberGraph make_T_member(const Graph& base);

Graph pattern_graph(const Pattern& p);

struct Witness {
    Pattern pattern;
    // map[i] is the host vertex playing pattern vertex i.
    std::vector<Vertex> map;

    bool operator==(const Witness&) const = default;
};

// True iff the map is injective, in range, and host[map] reproduces the
// pattern edge-for-edge and non-edge-for-non-edge.
bool validate_witness(const Graph& host, const Witness& w);

// Lexicographically least injective map realising `pattern` as an induced
// subgraph of `host`, or nullopt.
std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern);

// Least witness: hubs u < v adjacent, tips x < y common neighbours, x !~ y.
std::optional<Witness> find_k4_minus_e(const Graph& g);
// Least K5 as an increasing vertex list.
std::optional<Witness> find_k5(const Graph& g);

// First witness scanning `set` by increasing pattern order (ties: enum
// order). TMember entries are ignored.
std::optional<Witness> find_fixed_forbidden(const Graph& g, std::span<const PatternId> set);

// Exhaustive search for an induced member of the T family with at most
// max_base base vertices, drawing base vertices from `allowed` (all vertices
// when empty). Requires a block graph with no K5; throws std::domain_error
// otherwise.
std::optional<Witness> find_T_member(const Graph& g, int max_base = 10, std::span<const Vertex> allowed = {});

}  // namespace cvpg
