#include "cvpg/chordal.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cvpg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<int> positions(const EliminationOrder& order) {
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[idx(order[i])] = static_cast<int>(i);
    return pos;
}

// Shortest path from a to b avoiding every vertex marked blocked. Returns the
// path a..b or empty.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const std::vector<bool>& blocked) {
    std::vector<Vertex> parent(idx(g.order()), -1);
    std::vector<bool> seen(idx(g.order()), false);
    std::queue<Vertex> q;
    q.push(a);
    seen[idx(a)] = true;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        if (x == b) break;
        for (Vertex y : g.neighbors(x)) {
            if (seen[idx(y)] || blocked[idx(y)]) continue;
            seen[idx(y)] = true;
            parent[idx(y)] = x;
            q.push(y);
        }
    }
    if (!seen[idx(b)]) return {};
    std::vector<Vertex> path;
    for (Vertex x = b; x != -1; x = parent[idx(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Induced cycle through v, a, b (a, b nonadjacent neighbours of v), or empty.
std::vector<Vertex> hole_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
    std::vector<bool> blocked(idx(g.order()), false);
    blocked[idx(v)] = true;
    for (Vertex w : g.neighbors(v)) blocked[idx(w)] = true;
    blocked[idx(a)] = false;
    blocked[idx(b)] = false;
    auto path = shortest_path(g, a, b, blocked);
    if (path.empty()) return {};
    path.insert(path.begin(), v);
    return path;
}

// First vertex (in elimination order) whose later neighbours are not a clique,
// reported as (v, a, b) with a, b later nonadjacent neighbours.
bool peo_violation(const Graph& g, const EliminationOrder& order, Vertex& v, Vertex& a, Vertex& b) {
    auto pos = positions(order);
    for (Vertex x : order) {
        Vertex first = -1;
        for (Vertex y : g.neighbors(x))
            if (pos[idx(y)] > pos[idx(x)] && (first == -1 || pos[idx(y)] < pos[idx(first)])) first = y;
        if (first == -1) continue;
        for (Vertex y : g.neighbors(x)) {
            if (y == first || pos[idx(y)] < pos[idx(x)]) continue;
            if (!g.adjacent(first, y)) {
                v = x;
                a = first;
                b = y;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

EliminationOrder maximum_cardinality_search(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(idx(n), 0);
    std::vector<bool> visited(idx(n), false);
    EliminationOrder order(idx(n));
    for (int step = n - 1; step >= 0; --step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[idx(v)] && (best == -1 || weight[idx(v)] > weight[idx(best)])) best = v;
        visited[idx(best)] = true;
        order[idx(step)] = best;
        for (Vertex w : g.neighbors(best))
            if (!visited[idx(w)]) ++weight[idx(w)];
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
    if (order.size() != idx(g.order())) return false;
    Vertex v, a, b;
    return !peo_violation(g, order, v, a, b);
}

ChordalityResult check_chordal(const Graph& g) {
    ChordalityResult res;
    auto order = maximum_cardinality_search(g);
    Vertex v, a, b;
    if (!peo_violation(g, order, v, a, b)) return res;
    res.chordal = false;
    res.hole = hole_through(g, v, a, b);
    if (!res.hole.empty()) return res;
    for (Vertex x = 0; x < g.order() && res.hole.empty(); ++x) {
        const auto& nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size() && res.hole.empty(); ++i)
            for (std::size_t j = i + 1; j < nb.size() && res.hole.empty(); ++j)
                if (!g.adjacent(nb[i], nb[j])) res.hole = hole_through(g, x, nb[i], nb[j]);
    }
    if (res.hole.empty()) throw std::logic_error("non-chordal graph without a recoverable hole");
    return res;
}

bool is_chordal(const Graph& g) {
    auto order = maximum_cardinality_search(g);
    return is_perfect_elimination_order(g, order);
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
    auto order = maximum_cardinality_search(g);
    if (!is_perfect_elimination_order(g, order)) throw std::domain_error("input not chordal");
    auto pos = positions(order);
    std::vector<VertexSet> cand;
    for (Vertex v : order) {
        VertexSet c{v};
        for (Vertex w : g.neighbors(v))
            if (pos[idx(w)] > pos[idx(v)]) c.push_back(w);
        std::sort(c.begin(), c.end());
        cand.push_back(std::move(c));
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
    std::vector<VertexSet> kept;
    for (auto& c : cand) {
        bool contained = false;
        for (const auto& k : kept)
            if (std::includes(k.begin(), k.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        if (!contained) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

int clique_number_chordal(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques_chordal(g)) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.order();
    BlockDecomposition bd;
    std::vector<int> disc(idx(n), -1), low(idx(n), 0);
    std::vector<Edge> estack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[idx(root)] != -1) continue;
        if (g.degree(root) == 0) {
            disc[idx(root)] = timer++;
            bd.blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0}};
        disc[idx(root)] = low[idx(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[idx(w)] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[idx(w)] = low[idx(w)] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[idx(w)] < disc[idx(f.v)]) {
                    estack.emplace_back(f.v, w);
                    low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(w)]);
                }
                continue;
            }
            Vertex v = f.v, p = f.parent;
            stack.pop_back();
            if (p == -1) continue;
            low[idx(p)] = std::min(low[idx(p)], low[idx(v)]);
            if (low[idx(v)] >= disc[idx(p)]) {
                VertexSet block;
                while (true) {
                    Edge e = estack.back();
                    estack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e == Edge{p, v}) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                bd.blocks.push_back(std::move(block));
            }
        }
    }
    std::sort(bd.blocks.begin(), bd.blocks.end());

    std::vector<int> count(idx(n), 0);
    for (const auto& b : bd.blocks)
        for (Vertex v : b) ++count[idx(v)];
    for (Vertex v = 0; v < n; ++v)
        if (count[idx(v)] >= 2) bd.cut_vertices.push_back(v);

    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<int> cut_index(idx(n), -1);
    for (std::size_t i = 0; i < bd.cut_vertices.size(); ++i) cut_index[idx(bd.cut_vertices[i])] = static_cast<int>(i);
    GraphBuilder tb(nb + static_cast<int>(bd.cut_vertices.size()));
    for (int b = 0; b < nb; ++b)
        for (Vertex v : bd.blocks[idx(b)])
            if (cut_index[idx(v)] != -1) tb.add_edge(b, nb + cut_index[idx(v)]);
    bd.block_cut_tree = tb.build();
    return bd;
}

bool is_block_graph(const Graph& g) {
    for (const auto& b : block_decomposition(g).blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!g.adjacent(b[i], b[j])) return false;
    return true;
}

}  // namespace cvpg
