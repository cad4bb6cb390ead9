#include "cvpg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <tuple>

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

using Clock = std::chrono::steady_clock;

bool horizontal(const PathSeg& s) { return s.orient == Orientation::Horizontal; }

auto key(const PathSeg& s) { return std::make_tuple(s.orient, s.line, s.lo, s.hi); }

// Coordinates along one axis: x holds H endpoints and V lines.
std::vector<int> axis_values(const std::vector<PathSeg>& segs, bool x_axis) {
    std::vector<int> out;
    for (const auto& s : segs) {
        if (horizontal(s) == x_axis) {
            out.push_back(s.lo);
            out.push_back(s.hi);
        } else {
            out.push_back(s.line);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Maps every coordinate to 3 * (rank + 1) so each gap has room for two new
// values.
void renormalize(std::vector<PathSeg>& segs) {
    auto xs = axis_values(segs, true), ys = axis_values(segs, false);
    auto r = [](const std::vector<int>& v, int c) {
        return 3 * (static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin()) + 1);
    };
    for (auto& s : segs) {
        const auto& span = horizontal(s) ? xs : ys;
        const auto& line = horizontal(s) ? ys : xs;
        s = {s.orient, r(line, s.line), r(span, s.lo), r(span, s.hi)};
    }
}

std::vector<PathSeg> mirrored(std::vector<PathSeg> segs, bool flip_x, bool flip_y) {
    for (auto& s : segs) {
        bool flip_span = horizontal(s) ? flip_x : flip_y;
        bool flip_line = horizontal(s) ? flip_y : flip_x;
        if (flip_line) s.line = -s.line;
        if (flip_span) s = {s.orient, s.line, -s.hi, -s.lo};
    }
    renormalize(segs);
    return segs;
}

class Search {
public:
    Search(const Graph& g, const SearchConfig& cfg, Clock::time_point deadline, bool limited)
        : g_(g), cfg_(cfg), deadline_(deadline), limited_(limited) {
        const int n = g.order();
        pos_.assign(idx(n), -1);
        // Highest degree first, then the vertex with most placed neighbours.
        std::vector<int> placed_nb(idx(n), 0);
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (pos_[idx(v)] != -1) continue;
                if (best == -1 || std::make_pair(placed_nb[idx(v)], g.degree(v)) >
                                      std::make_pair(placed_nb[idx(best)], g.degree(best)))
                    best = v;
            }
            pos_[idx(best)] = step;
            order_.push_back(best);
            for (Vertex w : g.neighbors(best)) ++placed_nb[idx(w)];
        }
        // Twins (same open or closed neighbourhood) are interchangeable, so
        // their paths can be taken in increasing key order. Positions 0 and 1
        // are left out: they are already fixed by rotation and mirroring.
        prev_twin_.assign(idx(n), -1);
        auto closed = [&](Vertex v) {
            auto c = g.neighbors(v);
            c.insert(std::lower_bound(c.begin(), c.end(), v), v);
            return c;
        };
        for (std::size_t i = 2; i < order_.size(); ++i)
            for (std::size_t j = 2; j < i; ++j) {
                Vertex a = order_[i], b = order_[j];
                if (g.neighbors(a) == g.neighbors(b) || closed(a) == closed(b)) prev_twin_[i] = static_cast<int>(j);
            }
        max_cols_ = cfg.max_cols > 0 ? cfg.max_cols : 2 * n;
        max_rows_ = cfg.max_rows > 0 ? cfg.max_rows : 2 * n;
    }

    OracleVerdict run() {
        if (g_.order() == 0) return OracleVerdict::Yes;
        std::vector<PathSeg> placed{{Orientation::Horizontal, 3, 3, 6}};
        if (max_cols_ < 2 || max_rows_ < 1) return OracleVerdict::No;
        if (rec(placed)) return OracleVerdict::Yes;
        return timed_out_ ? OracleVerdict::Unknown : OracleVerdict::No;
    }

    GridRepresentation result() const {
        GridRepresentation rep;
        rep.paths.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) rep.paths[idx(order_[i])] = solution_[i];
        return compressed(rep);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool rec(std::vector<PathSeg>& placed) {
        ++nodes_;
        if (limited_ && (nodes_ & 255) == 0 && Clock::now() > deadline_) timed_out_ = true;
        if (timed_out_) return false;
        const std::size_t i = placed.size();
        if (i == order_.size()) {
            solution_ = placed;
            return true;
        }
        const Vertex v = order_[i];
        Vertex anchor = -1;
        for (Vertex w : g_.neighbors(v))
            if (pos_[idx(w)] < static_cast<int>(i) && (anchor == -1 || pos_[idx(w)] < pos_[idx(anchor)])) anchor = w;
        std::vector<PathSeg> cands;
        if (anchor == -1)
            free_candidates(placed, cands);
        else
            touching_candidates(placed, placed[idx(pos_[idx(anchor)])], cands);
        for (const auto& c : cands) {
            if (!compatible(placed, v, c)) continue;
            placed.push_back(c);
            std::vector<PathSeg> next = placed;
            placed.pop_back();
            renormalize(next);
            if (axis_values(next, true).size() > idx(max_cols_) || axis_values(next, false).size() > idx(max_rows_))
                continue;
            if (cfg_.symmetry_breaking && i == 1 && !canonical(next)) continue;
            if (cfg_.symmetry_breaking && prev_twin_[i] != -1 && !(key(next[idx(prev_twin_[i])]) < key(next[i])))
                continue;
            if (rec(next)) return true;
            if (timed_out_) return false;
        }
        return false;
    }

    bool compatible(const std::vector<PathSeg>& placed, Vertex v, const PathSeg& c) const {
        for (std::size_t j = 0; j < placed.size(); ++j) {
            bool overlap = false;
            auto p = contact_point(c, placed[j], &overlap);
            if (overlap) return false;
            if (p && !c.is_endpoint(*p) && !placed[j].is_endpoint(*p)) return false;
            if (p.has_value() != g_.adjacent(v, order_[j])) return false;
        }
        return true;
    }

    // The first path is fixed horizontal; the second is kept only when no
    // mirror image of the pair is lexicographically smaller.
    static bool canonical(const std::vector<PathSeg>& segs) {
        auto k = [](const std::vector<PathSeg>& s) {
            std::vector<decltype(key(s[0]))> out;
            for (const auto& x : s) out.push_back(key(x));
            return out;
        };
        auto base = k(segs);
        for (auto [fx, fy] : {std::pair{true, false}, std::pair{false, true}, std::pair{true, true}})
            if (k(mirrored(segs, fx, fy)) < base) return false;
        return true;
    }

    // Values on one axis: existing ones plus one fresh value per gap.
    static void greater(const std::vector<int>& e, int a, std::vector<int>& out) {
        out.clear();
        for (int x : e) {
            if (x > a) out.push_back(x);
            if (x >= a) out.push_back(x + 1);
        }
        if (e.empty() || a > e.back()) out.push_back(a + 1);
    }
    static void less(const std::vector<int>& e, int a, std::vector<int>& out) {
        out.clear();
        for (int x : e) {
            if (x < a) out.push_back(x);
            if (x <= a) out.push_back(x - 1);
        }
        if (e.empty() || a < e.front()) out.push_back(a - 1);
    }

    void touching_candidates(const std::vector<PathSeg>& placed, const PathSeg& w, std::vector<PathSeg>& out) const {
        const auto xs = axis_values(placed, true), ys = axis_values(placed, false);
        std::vector<int> lo_vals, hi_vals;
        for (Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
            const bool h = o == Orientation::Horizontal;
            const auto& span_axis = h ? xs : ys;
            if (o == w.orient) {
                greater(span_axis, w.hi, hi_vals);
                for (int hi : hi_vals) out.push_back({o, w.line, w.hi, hi});
                less(span_axis, w.lo, lo_vals);
                for (int lo : lo_vals) out.push_back({o, w.line, lo, w.lo});
                continue;
            }
            // Perpendicular: the line crosses w's span, the span reaches w's line.
            const auto& line_axis = h ? ys : xs;
            std::vector<int> lines;
            for (int x : line_axis) {
                if (x >= w.lo && x <= w.hi) lines.push_back(x);
                if (x >= w.lo && x < w.hi) lines.push_back(x + 1);
            }
            const int c = w.line;
            greater(span_axis, c, hi_vals);
            less(span_axis, c, lo_vals);
            for (int t : lines) {
                for (int hi : hi_vals) out.push_back({o, t, c, hi});
                for (int lo : lo_vals) out.push_back({o, t, lo, c});
                if (t == w.lo || t == w.hi)
                    for (int lo : lo_vals)
                        for (int hi : hi_vals) out.push_back({o, t, lo, hi});
            }
        }
    }

    // Vertex with no placed neighbour (only the first of a component, which
    // the caller handles, so this is a fallback): any position.
    void free_candidates(const std::vector<PathSeg>& placed, std::vector<PathSeg>& out) const {
        const auto xs = axis_values(placed, true), ys = axis_values(placed, false);
        auto all = [](const std::vector<int>& e) {
            std::vector<int> v;
            for (int x : e) v.insert(v.end(), {x - 1, x, x + 1});
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        for (Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
            const bool h = o == Orientation::Horizontal;
            auto lines = all(h ? ys : xs), span = all(h ? xs : ys);
            for (int t : lines)
                for (std::size_t a = 0; a < span.size(); ++a)
                    for (std::size_t b = a + 1; b < span.size(); ++b) out.push_back({o, t, span[a], span[b]});
        }
    }

    const Graph& g_;
    SearchConfig cfg_;
    Clock::time_point deadline_;
    bool limited_;
    std::vector<int> pos_;
    std::vector<Vertex> order_;
    std::vector<int> prev_twin_;
    int max_rows_ = 0, max_cols_ = 0;
    std::vector<PathSeg> solution_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

const char* oracle_verdict_name(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Yes: return "YES";
        case OracleVerdict::No: return "NO";
        case OracleVerdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

SearchResult search_representation(const Graph& g, const SearchConfig& cfg) {
    const bool limited = cfg.time_budget_ms > 0;
    const auto deadline = Clock::now() + std::chrono::milliseconds(cfg.time_budget_ms);
    SearchResult res;
    res.verdict = OracleVerdict::Yes;
    std::vector<GridRepresentation> parts;
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        Graph h = induced_subgraph(g, comp);
        SearchConfig sub = cfg;
        // Bounds are for the whole graph; a component gets the full budget
        // of its own size.
        if (cfg.max_rows == 0) sub.max_rows = 2 * h.order();
        if (cfg.max_cols == 0) sub.max_cols = 2 * h.order();
        Search s(h, sub, deadline, limited);
        auto v = s.run();
        res.nodes += s.nodes();
        if (v != OracleVerdict::Yes) {
            res.verdict = v;
            if (v == OracleVerdict::No) return res;
            continue;
        }
        parts.push_back(s.result());
    }
    if (res.verdict != OracleVerdict::Yes) return res;
    auto joined = compose_side_by_side(parts);
    GridRepresentation rep;
    rep.paths.resize(idx(g.order()));
    std::size_t k = 0;
    for (const auto& comp : comps)
        for (Vertex v : comp) rep.paths[idx(v)] = joined.paths[k++];
    res.rep = compressed(rep);
    if (!is_valid(g, *res.rep)) {
        res.verdict = OracleVerdict::Unknown;
        res.rep.reset();
    }
    return res;
}

std::int64_t default_time_budget_ms() {
    if (const char* env = std::getenv("VPG_TIME_BUDGET_MS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v >= 0) return v;
    }
    return 60000;
}

OracleVerdict is_contact_b0vpg_small(const Graph& g) {
    SearchConfig cfg;
    cfg.time_budget_ms = default_time_budget_ms();
    return search_representation(g, cfg).verdict;
}

}  // namespace cvpg
