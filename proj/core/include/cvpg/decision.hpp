#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvpg/graph.hpp"
#include "cvpg/patterns.hpp"

namespace cvpg {

enum class Verdict { Yes, No };

enum class GraphClass { Chordal, TreeCograph, P4Tidy, P5Free, Auto };

std::string class_name(GraphClass c);  // "chordal", "tree-cograph", ...
std::optional<GraphClass> parse_class(const std::string& s);

// l(v): number of K4 blocks containing v.
using K4Labels = std::vector<int>;

// Working state of the marking loop.
struct MarkState {
    std::vector<bool> internal;
    std::vector<int> out_deg;
    // (w, v): edge wv directed toward the marked vertex v.
    std::vector<Edge> arcs;
    // Unordered, stored with first < second.
    std::vector<Edge> coloured;
    // Vertices in the order they were marked.
    std::vector<Vertex> mark_order;
};

struct Decision {
    Verdict verdict = Verdict::Yes;
    std::optional<Witness> witness;  // present iff verdict is No
    GraphClass decided_class = GraphClass::Auto;
    K4Labels labels;                 // chordal route only
    MarkState state;                 // chordal route only
};

}  // namespace cvpg
