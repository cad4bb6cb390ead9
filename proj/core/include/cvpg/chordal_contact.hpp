#pragma once

#include <span>
#include <vector>

#include "cvpg/decision.hpp"
#include "cvpg/graph.hpp"

namespace cvpg {

// l(v) = number of 4-element cliques in `cliques` containing v.
K4Labels k4_labels(const Graph& g, std::span<const VertexSet> cliques);

struct RecognizeOptions {
    // Queue priority: a permutation of V(G). Seeds are enqueued, and newly
    // eligible neighbours are visited, in this order. Empty = ascending ids.
    std::vector<Vertex> priority;
};

// Contact B0-VPG recognition for chordal graphs. Throws std::domain_error if g
// is not chordal. A No decision always carries a witness that validates
// against g (K4-e, K5, H0 or a T member).
Decision recognize_chordal_contact(const Graph& g, const RecognizeOptions& opt = {});

// Builds a T-member witness from an over-budget vertex by following arcs.
// Falls back to exhaustive search over marked and over-budget vertices; throws
// std::logic_error if neither yields a witness.
Witness extract_T_witness(const Graph& g, const K4Labels& labels, const MarkState& state,
                          std::span<const VertexSet> cliques);

}  // namespace cvpg
