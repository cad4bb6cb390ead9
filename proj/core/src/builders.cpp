#include "cvpg/builders.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>

#include "cvpg/chordal.hpp"
#include "cvpg/patterns.hpp"

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Free-form segment used while building; endpoints in any order.
struct Seg {
    Vertex v;
    int x1, y1, x2, y2;
};
using Drawing = std::vector<Seg>;

struct Box {
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

Box box(const Drawing& d) {
    if (d.empty()) return {};
    Box b{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
    for (const auto& s : d) {
        b.x0 = std::min({b.x0, s.x1, s.x2});
        b.x1 = std::max({b.x1, s.x1, s.x2});
        b.y0 = std::min({b.y0, s.y1, s.y2});
        b.y1 = std::max({b.y1, s.y1, s.y2});
    }
    return b;
}

template <class F>
void transform(Drawing& d, F f) {
    for (auto& s : d) {
        auto p = f(s.x1, s.y1);
        auto q = f(s.x2, s.y2);
        s = {s.v, p.x, p.y, q.x, q.y};
    }
}

void rot_ccw(Drawing& d) {
    transform(d, [](int x, int y) { return GridPoint{-y, x}; });
}
void rot_cw(Drawing& d) {
    transform(d, [](int x, int y) { return GridPoint{y, -x}; });
}
void mirror_x(Drawing& d) {
    transform(d, [](int x, int y) { return GridPoint{-x, y}; });
}
void shift(Drawing& d, int dx, int dy) {
    transform(d, [=](int x, int y) { return GridPoint{x + dx, y + dy}; });
}
void append(Drawing& d, const Drawing& p) { d.insert(d.end(), p.begin(), p.end()); }

// Rank-compress both axes, keeping coordinate 0 at 0.
void compress_about_origin(Drawing& d) {
    std::vector<int> xs{0}, ys{0};
    for (const auto& s : d) {
        xs.insert(xs.end(), {s.x1, s.x2});
        ys.insert(ys.end(), {s.y1, s.y2});
    }
    for (auto* v : {&xs, &ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    auto rank = [](const std::vector<int>& v, int c) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };
    const int zx = rank(xs, 0), zy = rank(ys, 0);
    transform(d, [&](int x, int y) { return GridPoint{rank(xs, x) - zx, rank(ys, y) - zy}; });
}

GridRepresentation to_rep(const Drawing& d, int n) {
    GridRepresentation rep;
    rep.paths.resize(idx(n));
    std::vector<bool> seen(idx(n), false);
    for (const auto& s : d) {
        if (s.v < 0 || s.v >= n || seen[idx(s.v)]) throw std::logic_error("layout: bad or repeated vertex");
        seen[idx(s.v)] = true;
        PathSeg p;
        if (s.y1 == s.y2) {
            p = {Orientation::Horizontal, s.y1, std::min(s.x1, s.x2), std::max(s.x1, s.x2)};
        } else if (s.x1 == s.x2) {
            p = {Orientation::Vertical, s.x1, std::min(s.y1, s.y2), std::max(s.y1, s.y2)};
        } else {
            throw std::logic_error("layout: diagonal segment");
        }
        rep.paths[idx(s.v)] = p;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::logic_error("layout: vertex without a path");
    return rep;
}

GridRepresentation checked(const Graph& g, GridRepresentation rep, const char* who) {
    rep = normalized(rep);
    auto v = validate(g, rep);
    if (!v.empty())
        throw std::logic_error(std::string(who) + ": invalid layout (" + v.front().rule + " " +
                               std::to_string(v.front().u) + "," + std::to_string(v.front().v) + ": " +
                               v.front().message + ")");
    return rep;
}

// Cliques formed by `set` (components of g[set]), each sorted.
std::vector<VertexSet> cliques_of(const Graph& g, const VertexSet& set) {
    std::vector<VertexSet> out;
    for (const auto& c : connected_components(induced_subgraph(g, set))) {
        VertexSet m;
        for (Vertex x : c) m.push_back(set[idx(x)]);
        std::sort(m.begin(), m.end());
        out.push_back(m);
    }
    return out;
}

// Block-cut tree layout for chordal contact graphs.
class ChordalLayout {
public:
    explicit ChordalLayout(const Graph& g) : g_(g) {
        const int n = g.order();
        auto bd = block_decomposition(g);
        for (auto& b : bd.blocks)
            if (b.size() >= 2) blocks_.push_back(b);
        blocks_of_.resize(idx(n));
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (Vertex v : blocks_[b]) blocks_of_[idx(v)].push_back(static_cast<int>(b));
        parent_block_.assign(idx(n), -1);
        parent_vertex_.assign(blocks_.size(), -1);
        child_blocks_.resize(idx(n));
        memo_.assign(idx(n), {-1, -1});
        std::vector<bool> seen(idx(n), false);
        for (Vertex r = 0; r < n; ++r) {
            if (seen[idx(r)]) continue;
            roots_.push_back(r);
            seen[idx(r)] = true;
            std::vector<Vertex> queue{r};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                Vertex x = queue[h];
                for (int b : blocks_of_[idx(x)]) {
                    if (b == parent_block_[idx(x)]) continue;
                    parent_vertex_[idx(b)] = x;
                    child_blocks_[idx(x)].push_back(b);
                    for (Vertex m : blocks_[idx(b)])
                        if (m != x) {
                            parent_block_[idx(m)] = b;
                            seen[idx(m)] = true;
                            queue.push_back(m);
                        }
                }
            }
        }
    }

    bool feasible() {
        for (Vertex r : roots_)
            if (!f(r, 2)) return false;
        return true;
    }

    GridRepresentation build() {
        Drawing all;
        int cursor = 0;
        for (Vertex r : roots_) {
            Drawing d = layout(r, Mode::Root);
            Box b = box(d);
            shift(d, cursor - b.x0, 0);
            cursor += b.x1 - b.x0 + 2;
            append(all, d);
        }
        return compressed(to_rep(all, g_.order()));
    }

private:
    enum class Mode { End, Pass, Root };

    std::vector<Vertex> members(int b) const {
        std::vector<Vertex> m;
        for (Vertex x : blocks_[idx(b)])
            if (x != parent_vertex_[idx(b)]) m.push_back(x);
        return m;
    }

    // Subtree of v can be drawn when v has k endpoints left for its child
    // blocks (k = 1 if v ends at its parent block, 2 otherwise).
    bool f(Vertex v, int k) {
        int& slot = memo_[idx(v)][idx(k - 1)];
        if (slot != -1) return slot;
        int need = 0;
        bool ok = true;
        for (int b : child_blocks_[idx(v)]) {
            if (pass_ok(b)) continue;
            if (end_ok(b))
                ++need;
            else
                ok = false;
        }
        slot = ok && need <= k;
        return slot;
    }

    // Parent vertex of b passes through b's contact point.
    bool pass_ok(int b) {
        if (blocks_[idx(b)].size() >= 4) return false;
        for (Vertex m : members(b))
            if (!f(m, 1)) return false;
        return true;
    }

    // Parent vertex of b ends at b's contact point.
    bool end_ok(int b) {
        auto m = members(b);
        switch (blocks_[idx(b)].size()) {
            case 4: return f(m[0], 1) && f(m[1], 1) && f(m[2], 1);
            case 3: return (f(m[0], 2) && f(m[1], 1)) || (f(m[0], 1) && f(m[1], 2));
            case 2: return f(m[0], 2);
            default: return false;
        }
    }

    // P_v on row 0. End: P_v starts at the origin, everything else has x >= 1.
    // Pass/Root: the origin is interior to P_v and nothing else has x == 0.
    Drawing layout(Vertex v, Mode mode) {
        std::vector<int> slots, ends;
        for (int b : child_blocks_[idx(v)]) (pass_ok(b) ? slots : ends).push_back(b);
        const std::size_t k = mode == Mode::End ? 1 : 2;
        if (ends.size() > k) throw std::logic_error("represent_chordal: endpoint budget exceeded");
        Drawing d;
        int cursor = 1;
        for (int b : slots) {
            Drawing p = slot_piece(b);
            Box bx = box(p);
            int at = cursor - bx.x0;
            shift(p, at, 0);
            append(d, p);
            cursor = at + bx.x1 + 1;
        }
        int lo = mode == Mode::End ? 0 : -1;
        int hi = cursor;
        if (!ends.empty()) {
            Drawing p = end_piece(ends[0]);
            Box bx = box(p);
            hi = cursor - bx.x0;
            shift(p, hi, 0);
            append(d, p);
        }
        if (ends.size() == 2) {
            Drawing p = end_piece(ends[1]);
            mirror_x(p);
            Box bx = box(p);
            lo = -1 - bx.x1;
            shift(p, lo, 0);
            append(d, p);
        }
        d.push_back({v, lo, 0, hi, 0});
        compress_about_origin(d);
        return d;
    }

    // Block whose parent passes through the origin: members end there from
    // the north and the south.
    Drawing slot_piece(int b) {
        Drawing d;
        auto m = members(b);
        for (std::size_t i = 0; i < m.size(); ++i) {
            Drawing p = layout(m[i], Mode::End);
            if (i == 0)
                rot_ccw(p);
            else
                rot_cw(p);
            append(d, p);
        }
        return d;
    }

    // Block whose parent arrives from the west and ends at the origin.
    Drawing end_piece(int b) {
        auto m = members(b);
        std::vector<Vertex> ns;
        Vertex pass = -1, east = -1;
        if (m.size() == 3) {
            ns = {m[0], m[1]};
            east = m[2];
        } else if (m.size() == 2) {
            if (f(m[0], 1) && f(m[1], 1)) {
                ns = {m[0], m[1]};
            } else if (f(m[0], 2) && f(m[1], 1)) {
                pass = m[0];
                east = m[1];
            } else {
                pass = m[1];
                east = m[0];
            }
        } else if (f(m[0], 1)) {
            ns = {m[0]};
        } else {
            pass = m[0];
        }
        Drawing d;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            Drawing p = layout(ns[i], Mode::End);
            if (i == 0)
                rot_ccw(p);
            else
                rot_cw(p);
            append(d, p);
        }
        if (pass != -1) {
            Drawing p = layout(pass, Mode::Pass);
            rot_ccw(p);
            append(d, p);
        }
        if (east != -1) {
            const int reach = d.empty() ? 0 : std::max(0, box(d).x1);
            Drawing p = layout(east, Mode::End);
            transform(p, [reach](int x, int y) { return GridPoint{x >= 1 ? x + reach : x, y}; });
            append(d, p);
        }
        return d;
    }

    const Graph& g_;
    std::vector<VertexSet> blocks_;
    std::vector<std::vector<int>> blocks_of_;
    std::vector<int> parent_block_;
    std::vector<Vertex> parent_vertex_;
    std::vector<std::vector<int>> child_blocks_;
    std::vector<Vertex> roots_;
    std::vector<std::array<int, 2>> memo_;
};

// Parts are laid side by side; part i covers the outer ids in sets[i].
GridRepresentation assemble(int n, const std::vector<VertexSet>& sets, const std::vector<GridRepresentation>& reps) {
    auto joined = compose_side_by_side(reps);
    GridRepresentation out;
    out.paths.resize(idx(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (Vertex v : sets[i]) out.paths[idx(v)] = joined.paths[k++];
    return out;
}

GridRepresentation single_path() { return GridRepresentation{{PathSeg{Orientation::Horizontal, 0, 0, 1}}}; }

bool has_induced_c5(const Graph& g) { return find_induced(g, cycle_graph(5)).has_value(); }

template <class F>
GridRepresentation per_component(const Graph& g, F build) {
    auto comps = connected_components(g);
    std::vector<GridRepresentation> reps;
    for (const auto& c : comps) reps.push_back(build(induced_subgraph(g, c)));
    return assemble(g.order(), comps, reps);
}

GridRepresentation join_rep(const Graph& h) {
    if (is_chordal(h)) return represent_chordal(h);
    return represent_k2m(h);
}

GridRepresentation p4_tidy_rep(const Graph& h) {
    if (h.order() == 1) return single_path();
    if (!is_connected(h)) return per_component(h, p4_tidy_rep);
    if (!is_connected(complement(h))) return join_rep(h);
    if (auto sp = spider_partition(h)) return represent_spider(h, *sp);
    if (auto fs = fat_spider_partition(h)) return represent_fat_spider(h, *fs);
    if (is_tree(h)) return represent_tree(h);
    if (is_chordal(h)) return represent_chordal(h);
    if (has_induced_c5(h)) return represent_l(h, extract_L_structure(h));
    return represent_w(h, extract_W_structure(h));
}

GridRepresentation p5_free_component(const Graph& h) {
    if (h.order() == 1) return single_path();
    if (is_chordal(h)) return represent_chordal(h);
    if (has_induced_c5(h)) return represent_l(h, extract_L_structure(h));
    return represent_w(h, extract_W_structure(h));
}

GridRepresentation tree_cograph_rep(const Graph& g, const TreeCographNode& node) {
    using K = TreeCographNode::Kind;
    Graph h = induced_subgraph(g, node.vertices);
    switch (node.kind) {
        case K::LeafTree: return h.order() == 1 ? single_path() : represent_tree(h);
        case K::LeafCotree:
            if (is_chordal(h)) return represent_chordal(h);
            return represent_w(h, extract_W_structure(h));
        case K::Join: return join_rep(h);
        case K::Union: {
            std::vector<VertexSet> sets;
            std::vector<GridRepresentation> reps;
            for (const auto& c : node.children) {
                VertexSet local;
                for (Vertex v : c.vertices)
                    local.push_back(static_cast<Vertex>(
                        std::lower_bound(node.vertices.begin(), node.vertices.end(), v) - node.vertices.begin()));
                sets.push_back(local);
                reps.push_back(tree_cograph_rep(g, c));
            }
            return assemble(h.order(), sets, reps);
        }
    }
    throw std::logic_error("tree_cograph_rep: unknown node");
}

// Arms of a star at the origin, in order east, north, west, south.
constexpr std::array<std::array<int, 2>, 4> kDirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

}  // namespace

GridRepresentation represent_chordal(const Graph& g) {
    if (!is_chordal(g)) throw std::domain_error("input not chordal");
    if (g.order() == 0) return {};
    ChordalLayout layout(g);
    bool ok = is_block_graph(g) && clique_number_chordal(g) <= 4 && layout.feasible();
    if (!ok) throw std::domain_error("graph is not contact B0-VPG");
    return checked(g, layout.build(), "represent_chordal");
}

GridRepresentation represent_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
    if (t.order() == 1) return single_path();
    ChordalLayout layout(t);
    if (!layout.feasible()) throw std::logic_error("represent_tree: layout infeasible");
    return checked(t, layout.build(), "represent_tree");
}

GridRepresentation represent_k2m(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> hubs, rest;
    for (Vertex v = 0; v < n; ++v) (g.degree(v) == n - 2 && n - 2 != 2 ? hubs : rest).push_back(v);
    if (n == 4) {  // C4: either diagonal pair works
        hubs = {0};
        for (Vertex v = 1; v < n; ++v)
            if (!g.adjacent(0, v)) hubs.push_back(v);
        rest.clear();
        for (Vertex v = 0; v < n; ++v)
            if (v != hubs[0] && v != hubs.back()) rest.push_back(v);
    }
    if (hubs.size() != 2) throw std::domain_error("input is not K2,m");
    const int m = static_cast<int>(rest.size());
    Drawing d{{hubs[0], 0, 0, 0, m + 1}, {hubs[1], 1, 0, 1, m + 1}};
    for (int i = 0; i < m; ++i) d.push_back({rest[idx(i)], 0, i + 1, 1, i + 1});
    return checked(g, to_rep(d, n), "represent_k2m");
}

GridRepresentation represent_tree_cograph(const Graph& g, const TreeCographNode& root) {
    return checked(g, tree_cograph_rep(g, root), "represent_tree_cograph");
}

namespace {

// Star of the clique C + R at the origin, arms of length 4; each pendant
// (s, clique member, distance, side) touches its arm at the given distance,
// on the counter-clockwise side (side A) or the other (side B).
struct Pendant {
    Vertex s;
    Vertex on;
    int dist;
    bool side_a;
};

Drawing spider_star(const std::vector<Vertex>& clique, const std::vector<Pendant>& pendants) {
    if (clique.size() > 4) throw std::logic_error("spider layout: clique too large");
    Drawing d;
    for (std::size_t i = 0; i < clique.size(); ++i)
        d.push_back({clique[i], 0, 0, 4 * kDirs[i][0], 4 * kDirs[i][1]});
    for (const auto& p : pendants) {
        auto pos = std::find(clique.begin(), clique.end(), p.on) - clique.begin();
        auto [dx, dy] = kDirs[idx(static_cast<int>(pos))];
        int sx = -dy, sy = dx;
        if (!p.side_a) sx = -sx, sy = -sy;
        int px = p.dist * dx, py = p.dist * dy;
        d.push_back({p.s, px, py, px + sx, py + sy});
    }
    return d;
}

// Thin pairing (s_i, its unique neighbour in C).
std::vector<std::pair<Vertex, Vertex>> thin_pairs(const Graph& g, const SpiderPartition& sp) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex s : sp.s) {
        Vertex mate = -1;
        int count = 0;
        for (Vertex c : sp.c)
            if (g.adjacent(s, c)) {
                mate = c;
                ++count;
            }
        if (count != 1) throw std::domain_error("spider is not thin; not contact B0-VPG");
        out.emplace_back(s, mate);
    }
    return out;
}

}  // namespace

GridRepresentation represent_spider(const Graph& g, const SpiderPartition& sp) {
    std::vector<Vertex> clique(sp.c.begin(), sp.c.end());
    clique.insert(clique.end(), sp.r.begin(), sp.r.end());
    std::vector<Pendant> pend;
    for (auto [s, c] : thin_pairs(g, sp)) pend.push_back({s, c, 2, true});
    return checked(g, to_rep(spider_star(clique, pend), g.order()), "represent_spider");
}

GridRepresentation represent_fat_spider(const Graph& g, const FatSpider& fs) {
    const auto& sp = fs.base;
    auto pairs = thin_pairs(g, sp);
    bool twin_of_c = std::find(sp.c.begin(), sp.c.end(), fs.of) != sp.c.end();
    if (twin_of_c) {
        if (fs.true_twin || sp.k() != 2 || !sp.r.empty())
            throw std::domain_error("fat spider with this twin is not contact B0-VPG");
        // 4-cycle c_i, s_i, twin, c_j as a rectangle; s_j hangs off c_j.
        Vertex ci = fs.of, cj = sp.c[0] == ci ? sp.c[1] : sp.c[0];
        Vertex si = -1, sj = -1;
        for (auto [s, c] : pairs) (c == ci ? si : sj) = s;
        Drawing d{{ci, 0, 2, 2, 2}, {fs.twin, 0, 0, 2, 0}, {si, 0, 0, 0, 2}, {cj, 2, 0, 2, 2}, {sj, 2, 1, 3, 1}};
        return checked(g, to_rep(d, g.order()), "represent_fat_spider");
    }
    std::vector<Vertex> clique(sp.c.begin(), sp.c.end());
    clique.insert(clique.end(), sp.r.begin(), sp.r.end());
    std::vector<Pendant> pend;
    for (auto [s, c] : pairs) {
        pend.push_back({s, c, 2, true});
        if (s == fs.of) pend.push_back(fs.true_twin ? Pendant{fs.twin, c, 2, false} : Pendant{fs.twin, c, 3, true});
    }
    return checked(g, to_rep(spider_star(clique, pend), g.order()), "represent_fat_spider");
}

GridRepresentation represent_w(const Graph& g, const WStructure& ws) {
    Drawing d;
    if (ws.tag != "W1") {
        // Rectangle with corner contacts; K4 stars at the a1/b1 and a2/b2
        // corners. B1 and B2 use the matching subset of the B3 drawing.
        const std::array<Seg, 8> b3{{{0, 0, 2, 2, 2},
                                     {1, 2, 0, 2, 2},
                                     {2, 0, 0, 2, 0},
                                     {3, 0, 0, 0, 2},
                                     {4, 2, 2, 3, 2},
                                     {5, -1, 0, 0, 0},
                                     {6, 2, 2, 2, 3},
                                     {7, 0, -1, 0, 0}}};
        for (std::size_t i = 0; i < ws.map.size(); ++i) {
            Seg s = b3[i];
            s.v = ws.map[i];
            d.push_back(s);
        }
        return checked(g, to_rep(d, g.order()), "represent_w");
    }
    const int sa = static_cast<int>(ws.sa.size()), sb = static_cast<int>(ws.sb.size());
    const int x2 = sa + 1, y2 = sb + 1, y1 = sb + 2;
    d.push_back({ws.b2, x2, 0, x2, y1});
    d.push_back({ws.a2, 0, y2, x2, y2});
    for (int i = 0; i < sa; ++i) d.push_back({ws.sa[idx(i)], i + 1, y2, i + 1, y1});
    for (int i = 0; i < sb; ++i) d.push_back({ws.sb[idx(i)], 0, i + 1, x2, i + 1});

    auto split = [&](const VertexSet& set, std::vector<VertexSet>& small, std::vector<VertexSet>& k4) {
        for (auto& c : cliques_of(g, set)) (c.size() == 3 ? k4 : small).push_back(c);
    };
    std::vector<VertexSet> ka_small, ka_k4, kb_small, kb_k4;
    split(ws.ka, ka_small, ka_k4);
    split(ws.kb, kb_small, kb_k4);

    // b1 runs down from a1; K_b hangs below row 0.
    int y = -1;
    for (const auto& c : kb_small) {
        d.push_back({c[0], -1, y, 0, y});
        if (c.size() == 2) d.push_back({c[1], 0, y, 1, y});
        y -= 2;
    }
    int yb = kb_small.empty() ? 0 : y;
    if (!kb_k4.empty()) {
        if (kb_small.empty()) yb = -1;
        const auto& c = kb_k4[0];
        d.push_back({c[0], -1, yb, 0, yb});
        d.push_back({c[1], 0, yb, 1, yb});
        d.push_back({c[2], 0, yb - 1, 0, yb});
    }
    d.push_back({ws.b1, 0, yb, 0, y1});

    // a1 on the top row; K_a to the right of b2, K_ab at b1's top.
    int x = x2 + 2;
    for (const auto& c : ka_small) {
        d.push_back({c[0], x, y1, x, y1 + 1});
        if (c.size() == 2) d.push_back({c[1], x, y1 - 1, x, y1});
        x += 2;
    }
    const int xr = x;
    int xl = -1;
    if (ws.kab.size() == 2) {
        xl = 0;
        d.push_back({ws.kab[0], 0, y1, 0, y1 + 1});
        d.push_back({ws.kab[1], -1, y1, 0, y1});
    } else if (ws.kab.size() == 1) {
        d.push_back({ws.kab[0], 0, y1, 0, y1 + 1});
    }
    for (std::size_t i = 0; i < ka_k4.size(); ++i) {
        const auto& c = ka_k4[i];
        const int ex = i == 0 ? xr : xl, dir = i == 0 ? 1 : -1;
        if (i == 1 && ws.kab.size() == 2) throw std::domain_error("W structure: a1 in too many K4s");
        d.push_back({c[0], ex, y1, ex, y1 + 1});
        d.push_back({c[1], ex, y1 - 1, ex, y1});
        d.push_back({c[2], ex, y1, ex + dir, y1});
    }
    d.push_back({ws.a1, xl, y1, xr, y1});
    return checked(g, to_rep(d, g.order()), "represent_w");
}

GridRepresentation represent_l(const Graph& g, const LStructure& ls) {
    Drawing d;
    std::vector<VertexSet> small, k4;
    for (auto& c : cliques_of(g, ls.ku)) (c.size() == 3 ? k4 : small).push_back(c);
    if (ls.tag == "L3") {
        // w, u, v on rows 0, 2, 4 between a (column 0) and z; b over c on
        // column 1, meeting where u passes.
        int x = 3;
        for (const auto& c : small) {
            d.push_back({c[0], x, 2, x, 3});
            if (c.size() == 2) d.push_back({c[1], x, 1, x, 2});
            x += 2;
        }
        const int xz = std::max(2, x - 1);
        d.push_back({ls.a, 0, 0, 0, 4});
        d.push_back({ls.z, xz, 0, xz, 4});
        d.push_back({ls.w, 0, 0, xz, 0});
        d.push_back({ls.v, 0, 4, xz, 4});
        d.push_back({ls.u, 0, 2, xz, 2});
        d.push_back({ls.b, 1, 2, 1, 4});
        d.push_back({ls.c, 1, 0, 1, 2});
        return checked(g, to_rep(d, g.order()), "represent_l");
    }
    const int sv = static_cast<int>(ls.sv.size()), sw = static_cast<int>(ls.sw.size());
    const int t = sv + 1, l = t + sw + 1;
    d.push_back({ls.a, 0, 0, 0, l});
    d.push_back({ls.v, 0, 0, 2, 0});
    d.push_back({ls.b, 2, 0, 2, t});
    d.push_back({ls.c, 2, t, 2, l});
    d.push_back({ls.w, 0, l, 2, l});
    for (int i = 0; i < sv; ++i) d.push_back({ls.sv[idx(i)], 0, i + 1, 2, i + 1});
    for (int i = 0; i < sw; ++i) d.push_back({ls.sw[idx(i)], 0, t + i + 1, 2, t + i + 1});
    if (ls.tag == "L2") {
        int x = 4;
        for (const auto& c : small) {
            d.push_back({c[0], x, t, x, t + 1});
            if (c.size() == 2) d.push_back({c[1], x, t - 1, x, t});
            x += 2;
        }
        if (k4.size() > 1) throw std::domain_error("L structure: u in two K4s");
        if (!k4.empty()) {
            const auto& c = k4[0];
            d.push_back({c[0], x, t, x, t + 1});
            d.push_back({c[1], x, t - 1, x, t});
            d.push_back({c[2], x, t, x + 1, t});
        }
        d.push_back({ls.u, 0, t, x, t});
    }
    return checked(g, to_rep(d, g.order()), "represent_l");
}

GridRepresentation represent_contact(const Graph& g, GraphClass hint) {
    Decision dec = decide_contact(g, hint);
    if (dec.verdict == Verdict::No)
        throw std::domain_error("graph is not contact B0-VPG (contains " + pattern_name(dec.witness->pattern) + ")");
    if (g.order() == 0) return {};
    GridRepresentation rep;
    switch (dec.decided_class) {
        case GraphClass::Chordal: return represent_chordal(g);
        case GraphClass::TreeCograph: return represent_tree_cograph(g, *tree_cograph_decomposition(g));
        case GraphClass::P4Tidy: rep = p4_tidy_rep(g); break;
        case GraphClass::P5Free: rep = per_component(g, p5_free_component); break;
        case GraphClass::Auto: throw std::logic_error("represent_contact: unresolved class");
    }
    return checked(g, rep, "represent_contact");
}

// ---- generators ---------------------------------------------------------------

namespace {

GraphBuilder spider_base(int k, const Graph& r, int extra) {
    if (k < 2) throw std::invalid_argument("spider needs k >= 2");
    GraphBuilder b(2 * k + r.order() + extra);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.add_edge(k + i, k + j);
    for (auto [u, v] : r.edges()) b.add_edge(2 * k + u, 2 * k + v);
    for (int x = 0; x < r.order(); ++x)
        for (int i = 0; i < k; ++i) b.add_edge(2 * k + x, k + i);
    return b;
}

void add_hub_cliques(GraphBuilder& b, Vertex& next, const std::vector<int>& sizes, std::initializer_list<Vertex> hubs) {
    for (int s : sizes) {
        if (s < 1 || s > 3) throw std::invalid_argument("clique size must be 1..3");
        std::vector<Vertex> c;
        for (int i = 0; i < s; ++i) c.push_back(next++);
        b.add_clique(c);
        for (Vertex h : hubs)
            for (Vertex x : c) b.add_edge(h, x);
    }
}

}  // namespace

Graph make_thin_spider(int k, const Graph& r) {
    auto b = spider_base(k, r, 0);
    for (int i = 0; i < k; ++i) b.add_edge(i, k + i);
    return b.build();
}

Graph make_thick_spider(int k, const Graph& r) {
    auto b = spider_base(k, r, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) b.add_edge(i, k + j);
    return b.build();
}

Graph make_fat_spider(int k, int index, bool in_c, bool true_twin, const Graph& r) {
    if (index < 0 || index >= k) throw std::invalid_argument("twin index out of range");
    Graph thin = make_thin_spider(k, r);
    const Vertex x = thin.order();
    const Vertex y = in_c ? k + index : index;
    GraphBuilder b(x + 1);
    for (auto [u, v] : thin.edges()) b.add_edge(u, v);
    for (Vertex w : thin.neighbors(y)) b.add_edge(x, w);
    if (true_twin) b.add_edge(x, y);
    return b.build();
}

Graph make_w1(const WParams& p) {
    int n = 4 + p.sa + p.sb + p.kab;
    for (int s : p.ka) n += s;
    for (int s : p.kb) n += s;
    if (p.kab < 0 || p.kab > 2) throw std::invalid_argument("K_ab has at most two vertices");
    GraphBuilder b(n);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 0);
    Vertex next = 4;
    for (int i = 0; i < p.sa; ++i, ++next) b.add_edge(next, 0).add_edge(next, 2);
    for (int i = 0; i < p.sb; ++i, ++next) b.add_edge(next, 1).add_edge(next, 3);
    add_hub_cliques(b, next, p.ka, {0});
    add_hub_cliques(b, next, p.kb, {1});
    if (p.kab > 0) add_hub_cliques(b, next, {p.kab}, {0, 1});
    return b.build();
}

Graph make_l(const LParams& p) {
    if (p.variant < 1 || p.variant > 3) throw std::invalid_argument("L variant must be 1, 2 or 3");
    const auto k4s = std::count(p.ku.begin(), p.ku.end(), 3);
    if (k4s > 1) throw std::invalid_argument("u lies in at most one K4");
    if (p.variant == 3 && (p.sv > 0 || p.sw > 0 || k4s > 0))
        throw std::invalid_argument("L3 needs empty S_v, S_w and no K4 on u");
    int n = 5 + p.sv + p.sw;
    if (p.variant >= 2) {
        n += 1;
        for (int s : p.ku) n += s;
    }
    if (p.variant == 3) n += 1;
    GraphBuilder b(n);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(4, 0);
    Vertex next = 5;
    for (int i = 0; i < p.sv; ++i, ++next) b.add_edge(next, 0).add_edge(next, 2);
    for (int i = 0; i < p.sw; ++i, ++next) b.add_edge(next, 0).add_edge(next, 3);
    if (p.variant >= 2) {
        const Vertex u = next++;
        b.add_edge(u, 0).add_edge(u, 2).add_edge(u, 3);
        add_hub_cliques(b, next, p.ku, {u});
        if (p.variant == 3) {
            const Vertex z = next++;
            b.add_edge(z, 1).add_edge(z, 4).add_edge(z, u);
        }
    }
    return b.build();
}

}  // namespace cvpg
