#include "cvpg/grid_rep.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

bool horizontal(const PathSeg& s) { return s.orient == Orientation::Horizontal; }

std::string seg_str(const PathSeg& s) {
    return std::string(horizontal(s) ? "H" : "V") + " line " + std::to_string(s.line) + " [" +
           std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
}

// Point on the segment's own axis: for H, (coord, line); for V, (line, coord).
GridPoint at_coord(const PathSeg& s, int c) { return horizontal(s) ? GridPoint{c, s.line} : GridPoint{s.line, c}; }

template <class F>
GridRepresentation map_coords(const GridRepresentation& rep, F fx, F fy) {
    GridRepresentation out = rep;
    for (auto& s : out.paths) {
        if (horizontal(s)) {
            s.line = fy(s.line);
            s.lo = fx(s.lo);
            s.hi = fx(s.hi);
        } else {
            s.line = fx(s.line);
            s.lo = fy(s.lo);
            s.hi = fy(s.hi);
        }
    }
    return out;
}

}  // namespace

GridPoint PathSeg::first() const { return at_coord(*this, lo); }
GridPoint PathSeg::second() const { return at_coord(*this, hi); }

bool PathSeg::contains(GridPoint p) const {
    if (horizontal(*this)) return p.y == line && lo <= p.x && p.x <= hi;
    return p.x == line && lo <= p.y && p.y <= hi;
}

bool PathSeg::is_endpoint(GridPoint p) const { return p == first() || p == second(); }

std::optional<GridPoint> contact_point(const PathSeg& a, const PathSeg& b, bool* overlap) {
    if (overlap) *overlap = false;
    if (a.orient == b.orient) {
        if (a.line != b.line) return std::nullopt;
        int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo > hi) return std::nullopt;
        if (lo < hi) {
            if (overlap) *overlap = true;
            return std::nullopt;
        }
        return at_coord(a, lo);
    }
    const PathSeg& h = horizontal(a) ? a : b;
    const PathSeg& v = horizontal(a) ? b : a;
    GridPoint p{v.line, h.line};
    if (h.contains(p) && v.contains(p)) return p;
    return std::nullopt;
}

std::vector<Violation> validate(const Graph& g, const GridRepresentation& rep) {
    std::vector<Violation> out;
    if (rep.order() != g.order()) {
        out.push_back({"order", -1, -1,
                       "representation has " + std::to_string(rep.order()) + " paths for " +
                           std::to_string(g.order()) + " vertices"});
        return out;
    }
    for (Vertex v = 0; v < rep.order(); ++v) {
        const auto& s = rep.paths[idx(v)];
        if (s.lo >= s.hi) out.push_back({"segment", v, -1, "empty or reversed segment " + seg_str(s)});
    }
    if (!out.empty()) return out;
    for (Vertex u = 0; u < rep.order(); ++u)
        for (Vertex v = u + 1; v < rep.order(); ++v) {
            const auto& a = rep.paths[idx(u)];
            const auto& b = rep.paths[idx(v)];
            bool overlap = false;
            auto p = contact_point(a, b, &overlap);
            if (overlap) {
                out.push_back({"edge-sharing", u, v, seg_str(a) + " and " + seg_str(b) + " share a grid edge"});
                continue;
            }
            if (p && !a.is_endpoint(*p) && !b.is_endpoint(*p)) {
                out.push_back({"crossing", u, v,
                               "paths cross at (" + std::to_string(p->x) + "," + std::to_string(p->y) + ")"});
                continue;
            }
            bool adj = g.adjacent(u, v);
            if (adj && !p) out.push_back({"missing-contact", u, v, "adjacent vertices do not touch"});
            if (!adj && p) out.push_back({"extra-contact", u, v, "nonadjacent vertices touch"});
        }
    return out;
}

bool ends_at(const GridRepresentation& rep, Vertex v, GridPoint p) { return rep.paths[idx(v)].is_endpoint(p); }

std::vector<Contact> contacts(const GridRepresentation& rep, Vertex v) {
    std::vector<Contact> out;
    for (Vertex w = 0; w < rep.order(); ++w) {
        if (w == v) continue;
        if (auto p = contact_point(rep.paths[idx(v)], rep.paths[idx(w)])) out.push_back({w, *p});
    }
    return out;
}

std::vector<Contact> middle_contacts(const GridRepresentation& rep, Vertex v) {
    std::vector<Contact> out;
    for (const auto& c : contacts(rep, v))
        if (!ends_at(rep, v, c.at)) out.push_back(c);
    return out;
}

BoundingBox bounding_box(const GridRepresentation& rep) {
    if (rep.paths.empty()) return {};
    BoundingBox b{INT_MAX, INT_MAX, INT_MIN, INT_MIN};
    for (const auto& s : rep.paths)
        for (GridPoint p : {s.first(), s.second()}) {
            b.min_x = std::min(b.min_x, p.x);
            b.min_y = std::min(b.min_y, p.y);
            b.max_x = std::max(b.max_x, p.x);
            b.max_y = std::max(b.max_y, p.y);
        }
    return b;
}

GridRepresentation normalized(const GridRepresentation& rep) {
    auto b = bounding_box(rep);
    return map_coords(
        rep, std::function<int(int)>([&](int x) { return x - b.min_x; }),
        std::function<int(int)>([&](int y) { return y - b.min_y; }));
}

GridRepresentation compressed(const GridRepresentation& rep) {
    std::vector<int> xs, ys;
    for (const auto& s : rep.paths)
        for (GridPoint p : {s.first(), s.second()}) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
    auto uniq = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    auto rank = [](const std::vector<int>& v) {
        return std::function<int(int)>([&v](int c) {
            return static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
        });
    };
    return map_coords(rep, rank(xs), rank(ys));
}

GridRepresentation compose_side_by_side(std::span<const GridRepresentation> reps) {
    GridRepresentation out;
    int cursor = 0;
    for (const auto& r : reps) {
        if (r.paths.empty()) continue;
        auto b = bounding_box(r);
        int dx = cursor - b.min_x;
        auto moved = map_coords(r, std::function<int(int)>([dx](int x) { return x + dx; }),
                                std::function<int(int)>([](int y) { return y; }));
        out.paths.insert(out.paths.end(), moved.paths.begin(), moved.paths.end());
        cursor = b.max_x + dx + 2;
    }
    return out;
}

GridRepresentation refine(const GridRepresentation& rep, Axis kind, int at) {
    std::function<int(int)> shift = [at](int c) { return c > at ? c + 1 : c; };
    std::function<int(int)> keep = [](int c) { return c; };
    return kind == Axis::Column ? map_coords(rep, shift, keep) : map_coords(rep, keep, shift);
}

GridRepresentation split_path(const GridRepresentation& rep, Vertex u, GridPoint at) {
    const auto& s = rep.paths.at(idx(u));
    if (!s.contains(at) || s.is_endpoint(at)) throw std::invalid_argument("split point is not interior to the path");
    int c = horizontal(s) ? at.x : at.y;
    GridRepresentation out = rep;
    PathSeg rest = s;
    rest.lo = c;
    out.paths[idx(u)].hi = c;
    out.paths.push_back(rest);
    return out;
}

GridRepresentation merge_last_path(const GridRepresentation& rep, Vertex u) {
    if (rep.paths.size() < 2 || u < 0 || u + 1 >= rep.order())
        throw std::invalid_argument("merge_last_path: bad vertex");
    const auto& a = rep.paths[idx(u)];
    const auto& b = rep.paths.back();
    if (a.orient != b.orient || a.line != b.line || (a.hi != b.lo && b.hi != a.lo))
        throw std::invalid_argument("merge_last_path: paths are not collinear tip-to-tip");
    GridRepresentation out = rep;
    out.paths[idx(u)].lo = std::min(a.lo, b.lo);
    out.paths[idx(u)].hi = std::max(a.hi, b.hi);
    out.paths.pop_back();
    return out;
}

}  // namespace cvpg
