#include "cvpg/chordal_contact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "cvpg/chordal.hpp"

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

enum class EdgeState { Free, Directed, Coloured, InK4 };

Edge key(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<VertexSet> k4_blocks_of(Vertex v, std::span<const VertexSet> cliques) {
    std::vector<VertexSet> out;
    for (const auto& c : cliques)
        if (c.size() == 4 && std::binary_search(c.begin(), c.end(), v)) out.push_back(c);
    return out;
}

Witness h0_witness(Vertex v, std::span<const VertexSet> cliques) {
    auto blocks = k4_blocks_of(v, cliques);
    Witness w{{PatternId::H0, {}}, {v}};
    for (std::size_t b = 0; b < 3; ++b)
        for (Vertex x : blocks[b])
            if (x != v) w.map.push_back(x);
    return w;
}

// Arc-following extraction; nullopt when the BFS does not close into a valid
// T member.
std::optional<Witness> bfs_T_witness(const Graph& g, const K4Labels& l, const MarkState& st,
                                     std::span<const VertexSet> cliques, Vertex root) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> out(idx(n));
    for (auto [w, v] : st.arcs) out[idx(w)].push_back(v);
    for (auto& o : out) std::sort(o.begin(), o.end());

    std::vector<int> pos(idx(n), -1);
    std::vector<Vertex> order{root};
    std::vector<Edge> tree_edges;
    pos[idx(root)] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        int take = (v == root ? 3 : 2) - l[idx(v)];
        if (static_cast<int>(out[idx(v)].size()) < take) return std::nullopt;
        for (int k = 0; k < take; ++k) {
            Vertex c = out[idx(v)][idx(k)];
            if (pos[idx(c)] != -1) return std::nullopt;
            pos[idx(c)] = static_cast<int>(order.size());
            order.push_back(c);
            tree_edges.emplace_back(pos[idx(v)], pos[idx(c)]);
        }
    }
    if (order.size() < 2) return std::nullopt;
    Graph base = graph_from_edges(static_cast<int>(order.size()), tree_edges);
    Witness w{{PatternId::TMember, base}, order};
    for (Vertex v : order) {
        auto blocks = k4_blocks_of(v, cliques);
        int need = 3 - base.degree(pos[idx(v)]);
        if (static_cast<int>(blocks.size()) < need) return std::nullopt;
        for (int b = 0; b < need; ++b)
            for (Vertex x : blocks[idx(b)])
                if (x != v) w.map.push_back(x);
    }
    if (!validate_witness(g, w)) return std::nullopt;
    return w;
}

}  // namespace

K4Labels k4_labels(const Graph& g, std::span<const VertexSet> cliques) {
    K4Labels l(idx(g.order()), 0);
    for (const auto& c : cliques)
        if (c.size() == 4)
            for (Vertex v : c) ++l[idx(v)];
    return l;
}

Witness extract_T_witness(const Graph& g, const K4Labels& labels, const MarkState& state,
                          std::span<const VertexSet> cliques) {
    std::vector<Vertex> over;
    for (Vertex v = 0; v < g.order(); ++v)
        if (state.out_deg[idx(v)] > 2 - labels[idx(v)]) over.push_back(v);
    if (over.empty()) throw std::logic_error("extract_T_witness: no over-budget vertex");
    for (Vertex r : over)
        if (auto w = bfs_T_witness(g, labels, state, cliques, r)) return *w;
    std::vector<Vertex> allowed = over;
    for (Vertex v = 0; v < g.order(); ++v)
        if (state.internal[idx(v)]) allowed.push_back(v);
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    if (auto w = find_T_member(g, 10, allowed)) return *w;
    throw std::logic_error("extract_T_witness: no T member found");
}

Decision recognize_chordal_contact(const Graph& g, const RecognizeOptions& opt) {
    const int n = g.order();
    if (!is_chordal(g)) throw std::domain_error("input not chordal");

    std::vector<int> rank(idx(n));
    if (opt.priority.empty()) {
        for (Vertex v = 0; v < n; ++v) rank[idx(v)] = v;
    } else {
        if (opt.priority.size() != idx(n)) throw std::invalid_argument("priority is not a permutation");
        std::vector<bool> seen(idx(n), false);
        for (std::size_t i = 0; i < opt.priority.size(); ++i) {
            Vertex v = opt.priority[i];
            if (v < 0 || v >= n || seen[idx(v)]) throw std::invalid_argument("priority is not a permutation");
            seen[idx(v)] = true;
            rank[idx(v)] = static_cast<int>(i);
        }
    }
    auto by_rank = [&](std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return rank[idx(a)] < rank[idx(b)]; });
        return vs;
    };

    Decision d;
    d.decided_class = GraphClass::Chordal;
    d.state.internal.assign(idx(n), false);
    d.state.out_deg.assign(idx(n), 0);
    auto no = [&](Witness w) {
        d.verdict = Verdict::No;
        d.witness = std::move(w);
        return d;
    };

    // Steps 1-3.
    auto cliques = maximal_cliques_chordal(g);
    {
        std::map<Edge, int> count;
        for (const auto& c : cliques)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (++count[{c[i], c[j]}] == 2) return no(*find_k4_minus_e(g));
    }
    for (const auto& c : cliques)
        if (c.size() >= 5) return no(*find_k5(g));

    // Steps 4-6.
    d.labels = k4_labels(g, cliques);
    for (Vertex v = 0; v < n; ++v)
        if (d.labels[idx(v)] >= 3) return no(h0_witness(v, cliques));
    std::vector<Vertex> seeds;
    for (Vertex v = 0; v < n; ++v)
        if (d.labels[idx(v)] == 2) seeds.push_back(v);
    if (seeds.size() <= 1) return d;

    // Step 7.
    std::map<Edge, EdgeState> es;
    for (auto e : g.edges()) es[e] = EdgeState::Free;
    for (const auto& c : cliques)
        if (c.size() == 4)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) es[{c[i], c[j]}] = EdgeState::InK4;

    auto& st = d.state;
    const auto& l = d.labels;
    std::deque<Vertex> queue;
    for (Vertex v : by_rank(seeds)) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (st.internal[idx(v)] || st.out_deg[idx(v)] != 2 - l[idx(v)]) continue;
        st.internal[idx(v)] = true;
        st.mark_order.push_back(v);
        std::vector<Vertex> in;
        for (Vertex w : by_rank(g.neighbors(v))) {
            auto& s = es[key(v, w)];
            if (s != EdgeState::Free) continue;
            s = EdgeState::Directed;
            st.arcs.emplace_back(w, v);
            ++st.out_deg[idx(w)];
            in.push_back(w);
        }
        for (std::size_t i = 0; i < in.size(); ++i)
            for (std::size_t j = i + 1; j < in.size(); ++j) {
                if (!g.adjacent(in[i], in[j])) continue;
                auto& s = es[key(in[i], in[j])];
                if (s != EdgeState::Free) continue;
                s = EdgeState::Coloured;
                st.coloured.push_back(key(in[i], in[j]));
            }
        for (Vertex w : in)
            if (!st.internal[idx(w)] && st.out_deg[idx(w)] == 2 - l[idx(w)]) queue.push_back(w);
    }

    // Step 8.
    for (Vertex v = 0; v < n; ++v)
        if (st.out_deg[idx(v)] > 2 - l[idx(v)]) return no(extract_T_witness(g, l, st, cliques));
    return d;
}

}  // namespace cvpg
