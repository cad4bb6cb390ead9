#include "cvpg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cvpg {

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g(n_);
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) {
        auto nb = adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        twice += nb.size();
        g.adj_[static_cast<std::size_t>(v)] = std::move(nb);
    }
    g.edge_count_ = twice / 2;
    return g;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(s[i]));
        if (pos[static_cast<std::size_t>(s[i])] != -1)
            throw std::invalid_argument("duplicate vertex in induced set: " + std::to_string(s[i]));
        pos[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) b.add_edge(static_cast<Vertex>(i), j);
        }
    return b.build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    GraphBuilder b(n1 + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
    return b.build();
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    GraphBuilder b(n1 + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < g2.order(); ++v) b.add_edge(u, v + n1);
    return b.build();
}

bool is_tree(const Graph& g) {
    if (g.order() == 0) return false;
    return is_connected(g) && g.size() == static_cast<std::size_t>(g.order() - 1);
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    VertexSet out(s.begin(), s.end());
    for (Vertex v : s) out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder gb(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
    return gb.build();
}

namespace {

constexpr int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    if (g.order() > 11) throw std::invalid_argument("adjacency_code supports at most 11 vertices");
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << pair_bit(u, v);
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_bit(i, j) & 1U) b.add_edge(i, j);
    return b.build();
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_code supports at most 8 vertices");
    const auto edges = g.edges();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges)
            code |= std::uint64_t{1} << pair_bit(perm[static_cast<std::size_t>(u)],
                                                 perm[static_cast<std::size_t>(v)]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace cvpg
