#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvpg/graph.hpp"

namespace cvpg {

enum class Orientation { Horizontal, Vertical };

struct GridPoint {
    int x = 0;  // column
    int y = 0;  // row

    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;
};

// A horizontal segment lies on row `line` and spans columns [lo, hi]; a
// vertical one lies on column `line` and spans rows [lo, hi]. lo < hi.
struct PathSeg {
    Orientation orient = Orientation::Horizontal;
    int line = 0;
    int lo = 0;
    int hi = 1;

    GridPoint first() const;   // endpoint at lo
    GridPoint second() const;  // endpoint at hi
    bool contains(GridPoint p) const;
    bool is_endpoint(GridPoint p) const;

    bool operator==(const PathSeg&) const = default;
};

struct GridRepresentation {
    std::vector<PathSeg> paths;  // paths[v] represents vertex v

    int order() const { return static_cast<int>(paths.size()); }
    bool operator==(const GridRepresentation&) const = default;
};

// Point shared by two segments, if any. Collinear segments overlapping in a
// positive-length interval have no single contact point: returns nullopt and
// sets *overlap when provided.
std::optional<GridPoint> contact_point(const PathSeg& a, const PathSeg& b, bool* overlap = nullptr);

struct Violation {
    std::string rule;  // "order", "segment", "edge-sharing", "crossing", "missing-contact", "extra-contact"
    Vertex u = -1;
    Vertex v = -1;
    std::string message;
};

// Empty when rep is a contact B0-VPG representation of g.
std::vector<Violation> validate(const Graph& g, const GridRepresentation& rep);
inline bool is_valid(const Graph& g, const GridRepresentation& rep) { return validate(g, rep).empty(); }

struct Contact {
    Vertex other = -1;
    GridPoint at;
};

// True iff `p` is an endpoint of P_v.
bool ends_at(const GridRepresentation& rep, Vertex v, GridPoint p);
// Contacts lying strictly inside P_v, i.e. the middle neighbours of v.
std::vector<Contact> middle_contacts(const GridRepresentation& rep, Vertex v);
// All contacts of P_v with other paths, sorted by (other).
std::vector<Contact> contacts(const GridRepresentation& rep, Vertex v);

struct BoundingBox {
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    int columns() const { return max_x - min_x + 1; }
    int rows() const { return max_y - min_y + 1; }
};
BoundingBox bounding_box(const GridRepresentation& rep);

// Translate so the bounding box starts at (0,0).
GridRepresentation normalized(const GridRepresentation& rep);

// Replace every coordinate by its rank among the distinct values on its axis.
// Contact structure depends only on coordinate order, so validity and the
// represented graph are unchanged.
GridRepresentation compressed(const GridRepresentation& rep);

// Vertex ids are concatenated in list order; each part is translated right so
// that bounding boxes are separated by one empty column.
GridRepresentation compose_side_by_side(std::span<const GridRepresentation> reps);

enum class Axis { Row, Column };
// Insert an empty row/column right after coordinate `at`: every coordinate
// > at moves up by one, so paths running across the gap are extended.
GridRepresentation refine(const GridRepresentation& rep, Axis kind, int at);

// Cut P_u at an interior point: P_u keeps the part up to `at`, a new path
// (appended with id rep.order()) takes the rest. Throws std::invalid_argument
// if `at` is not interior to P_u.
GridRepresentation split_path(const GridRepresentation& rep, Vertex u, GridPoint at);
// Inverse of split_path: joins P_u with the last path, which must be collinear
// and touch P_u tip-to-tip.
GridRepresentation merge_last_path(const GridRepresentation& rep, Vertex u);

}  // namespace cvpg
