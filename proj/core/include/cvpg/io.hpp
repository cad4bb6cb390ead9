#pragma once

#include <string>
#include <string_view>

#include "cvpg/graph.hpp"
#include "cvpg/grid_rep.hpp"
#include "cvpg/patterns.hpp"

namespace cvpg {

// graph6, without the optional ">>graph6<<" header on output (accepted on
// input). Throws std::invalid_argument on malformed input.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// "n m" header followed by m lines "u v" (0-based). Blank lines and lines
// starting with '#' are ignored.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Edge list if the first content line holds two integers, graph6 otherwise.
Graph parse_graph(std::string_view text);

// Array of {"vertex","orient":"H"|"V","line","lo","hi"} objects.
std::string rep_to_json(const GridRepresentation& rep);
GridRepresentation rep_from_json(std::string_view text);

std::string witness_to_json(const Witness& w);

// Character grid with the largest row on top: '-' and '|' for path edges,
// '+' at path endpoints, '.' elsewhere.
std::string render_ascii(const GridRepresentation& rep);

// SVG 1.1, 20px per grid unit, paths as stroked lines with dotted endpoints
// and vertex labels.
std::string render_svg(const GridRepresentation& rep);

}  // namespace cvpg
