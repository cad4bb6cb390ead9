#include "cvpg/class_contact.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "cvpg/chordal.hpp"
#include "cvpg/chordal_contact.hpp"

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

VertexSet mapped(const VertexSet& local, const VertexSet& outer) {
    VertexSet out;
    for (Vertex v : local) out.push_back(outer[idx(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<TreeCographNode> decompose(const Graph& g, const VertexSet& s) {
    using K = TreeCographNode::Kind;
    Graph h = induced_subgraph(g, s);
    if (is_tree(h)) return TreeCographNode{K::LeafTree, s, {}};
    auto build = [&](K kind, const std::vector<VertexSet>& parts) -> std::optional<TreeCographNode> {
        TreeCographNode node{kind, s, {}};
        for (const auto& p : parts) {
            auto child = decompose(g, mapped(p, s));
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    };
    auto comps = connected_components(h);
    if (comps.size() > 1) return build(K::Union, comps);
    Graph co = complement(h);
    auto cocomps = connected_components(co);
    if (cocomps.size() > 1) return build(K::Join, cocomps);
    if (is_tree(co)) return TreeCographNode{K::LeafCotree, s, {}};
    return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

std::optional<SpiderPartition> thin_partition(const Graph& g) {
    const int n = g.order();
    if (n < 4) return std::nullopt;
    SpiderPartition sp;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 1) pairs.emplace_back(v, g.neighbors(v)[0]);
    if (pairs.size() < 2) return std::nullopt;
    VertexSet c;
    for (auto [s, cv] : pairs) {
        sp.s.push_back(s);
        sp.c.push_back(cv);
        c.push_back(cv);
    }
    VertexSet sset(sp.s.begin(), sp.s.end());
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return std::nullopt;
    for (Vertex x : c)
        if (contains(sset, x)) return std::nullopt;
    if (!is_clique(g, c)) return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (!contains(sset, v) && !contains(c, v)) sp.r.push_back(v);
    for (Vertex r : sp.r)
        for (Vertex x : c)
            if (!g.adjacent(r, x)) return std::nullopt;
    // Each c_i sees only its own s_i among S; guaranteed by degree one.
    sp.kind = SpiderKind::Thin;
    return sp;
}

bool twins(const Graph& g, Vertex x, Vertex y) {
    VertexSet nx, ny;
    for (Vertex w : g.neighbors(x))
        if (w != y) nx.push_back(w);
    for (Vertex w : g.neighbors(y))
        if (w != x) ny.push_back(w);
    return nx == ny;
}

}  // namespace

std::string class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Chordal: return "chordal";
        case GraphClass::TreeCograph: return "tree-cograph";
        case GraphClass::P4Tidy: return "p4-tidy";
        case GraphClass::P5Free: return "p5-free";
        case GraphClass::Auto: return "auto";
    }
    return "?";
}

std::optional<GraphClass> parse_class(const std::string& s) {
    for (GraphClass c : {GraphClass::Chordal, GraphClass::TreeCograph, GraphClass::P4Tidy, GraphClass::P5Free,
                         GraphClass::Auto})
        if (class_name(c) == s) return c;
    return std::nullopt;
}

std::optional<TreeCographNode> tree_cograph_decomposition(const Graph& g) {
    VertexSet all;
    for (Vertex v = 0; v < g.order(); ++v) all.push_back(v);
    if (all.empty()) return TreeCographNode{TreeCographNode::Kind::Union, {}, {}};
    return decompose(g, all);
}

bool is_tree_cograph(const Graph& g) { return tree_cograph_decomposition(g).has_value(); }

bool induces_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    const std::array<Vertex, 4> q{a, b, c, d};
    int edges = 0;
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(q[idx(i)], q[idx(j)])) {
                ++edges;
                ++deg[idx(i)];
                ++deg[idx(j)];
            }
    return edges == 3 && *std::min_element(deg.begin(), deg.end()) == 1 &&
           *std::max_element(deg.begin(), deg.end()) == 2;
}

bool is_p4_tidy(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    if (!induces_p4(g, a, b, c, d)) continue;
                    int partners = 0;
                    for (Vertex v = 0; v < n && partners < 2; ++v) {
                        if (v == a || v == b || v == c || v == d) continue;
                        // Subsets of A+v other than A itself: drop one of a..d.
                        int p4s = 1;
                        p4s += induces_p4(g, v, b, c, d);
                        p4s += induces_p4(g, a, v, c, d);
                        p4s += induces_p4(g, a, b, v, d);
                        p4s += induces_p4(g, a, b, c, v);
                        if (p4s >= 2) ++partners;
                    }
                    if (partners >= 2) return false;
                }
    return true;
}

std::optional<std::vector<Vertex>> find_p5(const Graph& g) { return find_induced(g, path_graph(5)); }

bool is_p5_free(const Graph& g) { return !find_p5(g).has_value(); }

std::optional<SpiderPartition> spider_partition(const Graph& g) {
    if (auto sp = thin_partition(g)) return sp;
    if (auto sp = thin_partition(complement(g))) {
        SpiderPartition out;
        out.s = sp->c;
        out.c = sp->s;
        out.r = sp->r;
        out.kind = SpiderKind::Thick;
        return out;
    }
    return std::nullopt;
}

std::optional<FatSpider> fat_spider_partition(const Graph& g) {
    const int n = g.order();
    if (n < 5 || spider_partition(g)) return std::nullopt;
    for (Vertex x = n - 1; x >= 0; --x) {
        VertexSet rest;
        for (Vertex v = 0; v < n; ++v)
            if (v != x) rest.push_back(v);
        auto sp = spider_partition(induced_subgraph(g, rest));
        if (!sp) continue;
        for (auto& v : sp->s) v = rest[idx(v)];
        for (auto& v : sp->c) v = rest[idx(v)];
        for (auto& v : sp->r) v = rest[idx(v)];
        for (const auto* side : {&sp->s, &sp->c})
            for (Vertex y : *side)
                if (twins(g, x, y)) return FatSpider{*sp, x, y, g.adjacent(x, y)};
    }
    return std::nullopt;
}

std::optional<WStructure> w_structure_at(const Graph& g, Vertex a1, Vertex b1, Vertex a2, Vertex b2) {
    WStructure ws;
    ws.tag = "W1";
    ws.a1 = a1;
    ws.b1 = b1;
    ws.a2 = a2;
    ws.b2 = b2;
    const VertexSet cyc{a1, b1, a2, b2};
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::find(cyc.begin(), cyc.end(), x) != cyc.end()) continue;
        bool na1 = g.adjacent(x, a1), nb1 = g.adjacent(x, b1), na2 = g.adjacent(x, a2), nb2 = g.adjacent(x, b2);
        if (na1 && na2 && !nb1 && !nb2)
            ws.sa.push_back(x);
        else if (nb1 && nb2 && !na1 && !na2)
            ws.sb.push_back(x);
        else if (na1 && !nb1 && !na2 && !nb2)
            ws.ka.push_back(x);
        else if (nb1 && !na1 && !na2 && !nb2)
            ws.kb.push_back(x);
        else if (na1 && nb1 && !na2 && !nb2)
            ws.kab.push_back(x);
        else
            return std::nullopt;
    }
    auto nbrs_within = [&](Vertex x, const VertexSet& allowed) {
        for (Vertex y : g.neighbors(x))
            if (!contains(allowed, y)) return false;
        return true;
    };
    for (Vertex x : ws.sa)
        if (g.degree(x) != 2) return std::nullopt;
    for (Vertex x : ws.sb)
        if (g.degree(x) != 2) return std::nullopt;
    // K_a / K_b: simplicial, degree <= 3, attached only to their hub.
    auto count_k4 = [&](const VertexSet& k, Vertex hub) -> std::optional<int> {
        VertexSet allowed = k;
        allowed.push_back(hub);
        std::sort(allowed.begin(), allowed.end());
        int k4 = 0;
        for (Vertex x : k) {
            if (g.degree(x) > 3 || !nbrs_within(x, allowed)) return std::nullopt;
            VertexSet nb(g.neighbors(x).begin(), g.neighbors(x).end());
            if (!is_clique(g, nb)) return std::nullopt;
            if (g.degree(x) == 3) ++k4;
        }
        return k4 / 3;
    };
    auto qa = count_k4(ws.ka, a1);
    auto qb = count_k4(ws.kb, b1);
    if (!qa || !qb) return std::nullopt;
    if (ws.kab.size() > 2 || !is_clique(g, ws.kab)) return std::nullopt;
    {
        VertexSet allowed = ws.kab;
        allowed.push_back(a1);
        allowed.push_back(b1);
        std::sort(allowed.begin(), allowed.end());
        for (Vertex x : ws.kab)
            if (!nbrs_within(x, allowed)) return std::nullopt;
    }
    int shared = ws.kab.size() == 2 ? 1 : 0;
    if (*qa + shared > 2 || *qb + shared > 2 || *qb > 1) return std::nullopt;
    return ws;
}

WStructure extract_W_structure(const Graph& g) {
    const int n = g.order();
    for (Vertex a1 = 0; a1 < n; ++a1)
        for (Vertex b1 : g.neighbors(a1))
            for (Vertex a2 : g.neighbors(b1)) {
                if (a2 == a1 || g.adjacent(a1, a2)) continue;
                for (Vertex b2 : g.neighbors(a2)) {
                    if (b2 == b1 || !g.adjacent(b2, a1) || g.adjacent(b2, b1)) continue;
                    if (auto ws = w_structure_at(g, a1, b1, a2, b2)) return *ws;
                }
            }
    for (PatternId id : {PatternId::B1, PatternId::B2, PatternId::B3}) {
        Graph p = make_pattern(id);
        if (p.order() != n || p.size() != g.size()) continue;
        if (auto m = find_induced(g, p)) {
            WStructure ws;
            ws.tag = pattern_name(id);
            ws.map = *m;
            ws.a1 = (*m)[0];
            ws.b1 = (*m)[1];
            ws.a2 = (*m)[2];
            ws.b2 = (*m)[3];
            return ws;
        }
    }
    throw std::logic_error("no induced C4 anchors a W structure");
}

std::optional<LStructure> l_structure_at(const Graph& g, Vertex a, Vertex v, Vertex b, Vertex c, Vertex w) {
    LStructure ls;
    ls.a = a;
    ls.v = v;
    ls.b = b;
    ls.c = c;
    ls.w = w;
    const std::array<Vertex, 5> cyc{a, v, b, c, w};
    VertexSet others;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::find(cyc.begin(), cyc.end(), x) != cyc.end()) continue;
        unsigned mask = 0;
        for (std::size_t i = 0; i < 5; ++i)
            if (g.adjacent(x, cyc[i])) mask |= 1U << i;
        // bit order: a v b c w
        if (mask == 0b00101 && g.degree(x) == 2)
            ls.sv.push_back(x);
        else if (mask == 0b01001 && g.degree(x) == 2)
            ls.sw.push_back(x);
        else if (mask == 0b01101) {
            if (ls.u != -1) return std::nullopt;
            ls.u = x;
        } else
            others.push_back(x);
    }
    if (ls.u == -1) {
        if (!others.empty()) return std::nullopt;
        ls.tag = "L1";
        return ls;
    }
    // Every remaining vertex is z (~ v, w, u only) or a simplicial K_u vertex.
    for (Vertex x : others) {
        bool nv = g.adjacent(x, v), nw = g.adjacent(x, w), nu = g.adjacent(x, ls.u);
        if (nv && nw && nu && g.degree(x) == 3) {
            if (ls.z != -1) return std::nullopt;
            ls.z = x;
        } else if (nu && !g.adjacent(x, a) && !g.adjacent(x, b) && !g.adjacent(x, c) && !nv && !nw) {
            ls.ku.push_back(x);
        } else {
            return std::nullopt;
        }
    }
    VertexSet allowed = ls.ku;
    allowed.push_back(ls.u);
    std::sort(allowed.begin(), allowed.end());
    int deg3 = 0;
    for (Vertex x : ls.ku) {
        if (g.degree(x) > 3) return std::nullopt;
        for (Vertex y : g.neighbors(x))
            if (!contains(allowed, y)) return std::nullopt;
        VertexSet nb(g.neighbors(x).begin(), g.neighbors(x).end());
        if (!is_clique(g, nb)) return std::nullopt;
        if (g.degree(x) == 3) ++deg3;
    }
    const int k4 = deg3 / 3;
    if (g.degree(ls.u) != 3 + static_cast<int>(ls.ku.size()) + (ls.z != -1 ? 1 : 0)) return std::nullopt;
    if (ls.z == -1) {
        if (k4 > 1) return std::nullopt;
        ls.tag = "L2";
        return ls;
    }
    if (!ls.sv.empty() || !ls.sw.empty() || k4 > 0) return std::nullopt;
    ls.tag = "L3";
    return ls;
}

LStructure extract_L_structure(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex v : g.neighbors(a))
            for (Vertex b : g.neighbors(v)) {
                if (b == a || g.adjacent(b, a)) continue;
                for (Vertex c : g.neighbors(b)) {
                    if (c == v || g.adjacent(c, a) || g.adjacent(c, v)) continue;
                    for (Vertex w : g.neighbors(c)) {
                        if (w == b || !g.adjacent(w, a) || g.adjacent(w, v) || g.adjacent(w, b)) continue;
                        if (auto ls = l_structure_at(g, a, v, b, c, w)) return *ls;
                    }
                }
            }
    throw std::logic_error("no induced C5 anchors an L structure");
}

std::vector<PatternId> cograph_forbidden() {
    return {PatternId::K5, PatternId::K33, PatternId::H0, PatternId::K4MinusE};
}

std::vector<PatternId> p5_free_forbidden() {
    return {PatternId::K5,   PatternId::H0, PatternId::GP2, PatternId::K33, PatternId::K33Star, PatternId::CoC6,
            PatternId::G1,   PatternId::G2, PatternId::G3,  PatternId::G4,  PatternId::K4MinusE};
}

bool in_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::Chordal: return is_chordal(g);
        case GraphClass::TreeCograph: return is_tree_cograph(g);
        case GraphClass::P4Tidy: return is_p4_tidy(g);
        case GraphClass::P5Free: return is_p5_free(g);
        case GraphClass::Auto: return detect_class(g).has_value();
    }
    return false;
}

std::optional<GraphClass> detect_class(const Graph& g) {
    for (GraphClass c : {GraphClass::Chordal, GraphClass::TreeCograph, GraphClass::P4Tidy, GraphClass::P5Free})
        if (in_class(g, c)) return c;
    return std::nullopt;
}

Decision decide_contact(const Graph& g, GraphClass hint) {
    GraphClass cls = hint;
    if (cls == GraphClass::Auto) {
        auto found = detect_class(g);
        if (!found) throw std::domain_error("input is not chordal, a tree-cograph, P4-tidy or P5-free");
        cls = *found;
    } else if (!in_class(g, cls)) {
        throw std::domain_error("input not " + class_name(cls));
    }
    if (cls == GraphClass::Chordal) return recognize_chordal_contact(g);
    Decision d;
    d.decided_class = cls;
    auto set = cls == GraphClass::P5Free ? p5_free_forbidden() : cograph_forbidden();
    if (auto w = find_fixed_forbidden(g, set)) {
        d.verdict = Verdict::No;
        d.witness = std::move(w);
    }
    return d;
}

}  // namespace cvpg
