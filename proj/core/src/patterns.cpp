#include "cvpg/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "cvpg/chordal.hpp"

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

Graph from_list(int n, std::initializer_list<Edge> es) {
    std::vector<Edge> v(es);
    return graph_from_edges(n, v);
}

void add_k4(GraphBuilder& b, Vertex hub, Vertex first_new) {
    const std::array<Vertex, 4> q{hub, first_new, first_new + 1, first_new + 2};
    b.add_clique(q);
}

// a=0, v=1, b=2, c=3, w=4
void add_c5(GraphBuilder& b) {
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(4, 0);
}

std::string normalize(std::string_view s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '*')
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return out;
}

constexpr std::array<PatternId, 14> kFixed{
    PatternId::K5, PatternId::K4MinusE, PatternId::K33, PatternId::K33Star, PatternId::CoC6,
    PatternId::H0, PatternId::B1,       PatternId::B2,  PatternId::B3,      PatternId::G1,
    PatternId::G2, PatternId::G3,       PatternId::G4,  PatternId::GP2,
};

}  // namespace

std::string pattern_name(PatternId id) {
    switch (id) {
        case PatternId::K5: return "K5";
        case PatternId::K4MinusE: return "K4-e";
        case PatternId::K33: return "K3,3";
        case PatternId::K33Star: return "K3,3*";
        case PatternId::CoC6: return "co-C6";
        case PatternId::H0: return "H0";
        case PatternId::B1: return "B1";
        case PatternId::B2: return "B2";
        case PatternId::B3: return "B3";
        case PatternId::G1: return "G1";
        case PatternId::G2: return "G2";
        case PatternId::G3: return "G3";
        case PatternId::G4: return "G4";
        case PatternId::TMember: return "T";
        case PatternId::GP2: return "G_P2";
    }
    return "?";
}

std::string pattern_name(const Pattern& p) {
    if (p.id != PatternId::TMember) return pattern_name(p.id);
    std::string s = "T{";
    bool first = true;
    for (auto [u, v] : p.base.edges()) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s + "}";
}

std::optional<PatternId> parse_pattern_id(std::string_view name) {
    const std::string key = normalize(name);
    for (PatternId id : kFixed)
        if (normalize(pattern_name(id)) == key) return id;
    if (key == "K4MINUSE") return PatternId::K4MinusE;
    if (key == "K33STAR") return PatternId::K33Star;
    if (key == "COC6" || key == "CC6") return PatternId::CoC6;
    return std::nullopt;
}

Graph make_pattern(PatternId id) {
    switch (id) {
        case PatternId::K5: return complete_graph(5);
        case PatternId::K4MinusE: return from_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        case PatternId::K33: {
            GraphBuilder b(6);
            for (Vertex u = 0; u < 6; u += 2)
                for (Vertex v = 1; v < 6; v += 2) b.add_edge(u, v);
            return b.build();
        }
        case PatternId::K33Star: {
            GraphBuilder b(7);
            for (Vertex u = 0; u < 6; u += 2)
                for (Vertex v = 1; v < 6; v += 2)
                    if (!(u == 4 && v == 5)) b.add_edge(u, v);
            b.add_edge(4, 6).add_edge(6, 5);
            return b.build();
        }
        case PatternId::CoC6:
            return from_list(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
        case PatternId::H0: {
            GraphBuilder b(10);
            add_k4(b, 0, 1);
            add_k4(b, 0, 4);
            add_k4(b, 0, 7);
            return b.build();
        }
        case PatternId::B1:
        case PatternId::B2:
        case PatternId::B3: {
            const int n = id == PatternId::B1 ? 6 : id == PatternId::B2 ? 7 : 8;
            GraphBuilder b(n);
            b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 0);
            b.add_edge(4, 0).add_edge(4, 1).add_edge(5, 2).add_edge(5, 3);
            if (n >= 7) b.add_edge(6, 0).add_edge(6, 1).add_edge(6, 4);
            if (n >= 8) b.add_edge(7, 2).add_edge(7, 3).add_edge(7, 5);
            return b.build();
        }
        case PatternId::G1: {
            GraphBuilder b(12);
            add_c5(b);
            b.add_edge(5, 0).add_edge(5, 2).add_edge(5, 3);
            add_k4(b, 5, 6);
            add_k4(b, 5, 9);
            return b.build();
        }
        case PatternId::G2: {
            GraphBuilder b(7);
            add_c5(b);
            b.add_edge(5, 0).add_edge(5, 2).add_edge(6, 0).add_edge(6, 3).add_edge(5, 6);
            return b.build();
        }
        case PatternId::G3: {
            GraphBuilder b(7);
            add_c5(b);
            b.add_edge(5, 0).add_edge(5, 2).add_edge(5, 3);
            b.add_edge(6, 1).add_edge(6, 2).add_edge(6, 4);
            return b.build();
        }
        case PatternId::G4: {
            GraphBuilder b(10);
            add_c5(b);
            b.add_edge(5, 0).add_edge(5, 2).add_edge(5, 3);
            b.add_edge(6, 1).add_edge(6, 4).add_edge(6, 5);
            add_k4(b, 5, 7);
            return b.build();
        }
        case PatternId::GP2: return make_T_member(path_graph(2)).graph;
        case PatternId::TMember: break;
    }
    throw std::invalid_argument("make_pattern: T members need a base tree");
}

TMemberGraph make_T_member(const Graph& base) {
    const int b = base.order();
    if (b < 2) throw std::invalid_argument("base tree needs at least 2 vertices");
    if (!is_tree(base)) throw std::invalid_argument("base graph is not a tree");
    int extra = 0;
    for (Vertex v = 0; v < b; ++v) {
        if (base.degree(v) > 3) throw std::invalid_argument("base tree has a vertex of degree > 3");
        extra += 3 * (3 - base.degree(v));
    }
    GraphBuilder gb(b + extra);
    for (auto [u, v] : base.edges()) gb.add_edge(u, v);
    Vertex next = b;
    for (Vertex v = 0; v < b; ++v)
        for (int k = 0; k < 3 - base.degree(v); ++k, next += 3) add_k4(gb, v, next);
    TMemberGraph out{gb.build(), {}};
    for (Vertex v = 0; v < b; ++v) out.base.push_back(v);
    return out;
}

Graph pattern_graph(const Pattern& p) {
    if (p.id == PatternId::TMember) return make_T_member(p.base).graph;
    return make_pattern(p.id);
}

bool validate_witness(const Graph& host, const Witness& w) {
    Graph pg;
    try {
        pg = pattern_graph(w.pattern);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (w.map.size() != idx(pg.order())) return false;
    std::vector<bool> used(idx(host.order()), false);
    for (Vertex h : w.map) {
        if (h < 0 || h >= host.order() || used[idx(h)]) return false;
        used[idx(h)] = true;
    }
    for (Vertex i = 0; i < pg.order(); ++i)
        for (Vertex j = i + 1; j < pg.order(); ++j)
            if (pg.adjacent(i, j) != host.adjacent(w.map[idx(i)], w.map[idx(j)])) return false;
    return true;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
    const int k = pattern.order();
    if (k > host.order()) return std::nullopt;
    if (k == 0) return std::vector<Vertex>{};

    // anchor[i]: earliest pattern neighbour of i among 0..i-1, or -1.
    std::vector<int> anchor(idx(k), -1);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j : pattern.neighbors(i))
            if (j < i) {
                anchor[idx(i)] = j;
                break;
            }

    std::vector<Vertex> map(idx(k), -1);
    std::vector<bool> used(idx(host.order()), false);
    std::vector<Vertex> all(idx(host.order()));
    for (Vertex v = 0; v < host.order(); ++v) all[idx(v)] = v;

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        const auto& cand = anchor[idx(i)] == -1 ? all : host.neighbors(map[idx(anchor[idx(i)])]);
        for (Vertex h : cand) {
            if (used[idx(h)] || host.degree(h) < pattern.degree(i)) continue;
            bool ok = true;
            for (Vertex j = 0; j < i && ok; ++j)
                ok = pattern.adjacent(i, j) == host.adjacent(h, map[idx(j)]);
            if (!ok) continue;
            map[idx(i)] = h;
            used[idx(h)] = true;
            if (place(i + 1)) return true;
            used[idx(h)] = false;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

std::optional<Witness> find_k4_minus_e(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            std::vector<Vertex> common;
            std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                                  g.neighbors(v).end(), std::back_inserter(common));
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]))
                        return Witness{{PatternId::K4MinusE, {}}, {u, v, common[i], common[j]}};
        }
    return std::nullopt;
}

std::optional<Witness> find_k5(const Graph& g) {
    std::vector<Vertex> clique;
    std::function<bool(Vertex)> grow = [&](Vertex from) -> bool {
        if (clique.size() == 5) return true;
        for (Vertex h = from; h < g.order(); ++h) {
            if (g.degree(h) < 4) continue;
            bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, h); });
            if (!ok) continue;
            clique.push_back(h);
            if (grow(h + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    if (grow(0)) return Witness{{PatternId::K5, {}}, clique};
    return std::nullopt;
}

std::optional<Witness> find_fixed_forbidden(const Graph& g, std::span<const PatternId> set) {
    std::vector<std::pair<int, PatternId>> order;
    for (PatternId id : set) {
        if (id == PatternId::TMember) continue;
        order.emplace_back(make_pattern(id).order(), id);
    }
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (auto [size, id] : order) {
        std::optional<Witness> w;
        if (id == PatternId::K4MinusE) {
            w = find_k4_minus_e(g);
        } else if (id == PatternId::K5) {
            w = find_k5(g);
        } else if (auto m = find_induced(g, make_pattern(id))) {
            w = Witness{{id, {}}, *m};
        }
        if (w) return w;
    }
    return std::nullopt;
}

std::optional<Witness> find_T_member(const Graph& g, int max_base, std::span<const Vertex> allowed) {
    if (!is_block_graph(g) || find_k5(g)) throw std::domain_error("find_T_member needs a K5-free block graph");
    const int n = g.order();
    std::vector<VertexSet> k4s;
    for (auto& c : maximal_cliques_chordal(g))
        if (c.size() == 4) k4s.push_back(c);
    std::vector<std::vector<int>> k4_of(idx(n));
    for (std::size_t i = 0; i < k4s.size(); ++i)
        for (Vertex v : k4s[i]) k4_of[idx(v)].push_back(static_cast<int>(i));

    std::vector<bool> ok_vertex(idx(n), allowed.empty());
    for (Vertex v : allowed) ok_vertex[idx(v)] = true;

    std::vector<int> in_s(idx(n), 0);   // 1 if in S
    std::vector<int> s_deg(idx(n), 0);  // neighbours in S, for every vertex
    std::vector<Vertex> s;

    auto free_k4s = [&](Vertex v) {
        std::vector<int> out;
        for (int b : k4_of[idx(v)]) {
            bool clean = true;
            for (Vertex x : k4s[idx(b)])
                if (x != v && in_s[idx(x)]) clean = false;
            if (clean) out.push_back(b);
        }
        return out;
    };

    auto try_witness = [&]() -> std::optional<Witness> {
        for (Vertex v : s) {
            int need = 3 - (s_deg[idx(v)]);
            if (static_cast<int>(free_k4s(v).size()) < need) return std::nullopt;
        }
        Witness w{{PatternId::TMember, induced_subgraph(g, s)}, s};
        for (Vertex v : s) {
            auto fk = free_k4s(v);
            for (int k = 0; k < 3 - s_deg[idx(v)]; ++k)
                for (Vertex x : k4s[idx(fk[idx(k)])])
                    if (x != v) w.map.push_back(x);
        }
        if (!validate_witness(g, w)) return std::nullopt;
        return w;
    };

    auto add = [&](Vertex v, int delta) {
        in_s[idx(v)] += delta;
        for (Vertex w : g.neighbors(v)) s_deg[idx(w)] += delta;
        if (delta > 0)
            s.push_back(v);
        else
            s.pop_back();
    };

    std::optional<Witness> found;
    // ESU-style enumeration of connected induced subtrees with root = least id.
    std::function<void(std::vector<Vertex>, Vertex)> extend = [&](std::vector<Vertex> ext, Vertex root) {
        if (found) return;
        if (s.size() >= 2 && (found = try_witness())) return;
        if (static_cast<int>(s.size()) >= max_base) return;
        while (!ext.empty() && !found) {
            Vertex w = ext.back();
            ext.pop_back();
            if (s_deg[idx(w)] != 1) continue;
            Vertex parent = -1;
            for (Vertex x : g.neighbors(w))
                if (in_s[idx(x)]) parent = x;
            if (s_deg[idx(parent)] >= 3) continue;
            std::vector<Vertex> next = ext;
            for (Vertex x : g.neighbors(w))
                if (x > root && ok_vertex[idx(x)] && !in_s[idx(x)] && s_deg[idx(x)] == 0 &&
                    std::find(next.begin(), next.end(), x) == next.end())
                    next.push_back(x);
            add(w, 1);
            extend(std::move(next), root);
            add(w, -1);
        }
    };
    for (Vertex r = 0; r < n && !found; ++r) {
        if (!ok_vertex[idx(r)]) continue;
        add(r, 1);
        std::vector<Vertex> ext;
        for (Vertex x : g.neighbors(r))
            if (x > r && ok_vertex[idx(x)]) ext.push_back(x);
        extend(ext, r);
        add(r, -1);
    }
    return found;
}

}  // namespace cvpg
