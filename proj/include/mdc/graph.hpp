#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdc/bits.hpp"

namespace mdc {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// 64-bit mask per vertex. Immutable after construction; orders above
/// max_order are rejected since every algorithm here is exact search.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints are hard errors.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        if (n > max_order)
            throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds supported maximum " +
                                        std::to_string(max_order));
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
            g.adj_[static_cast<std::size_t>(u)] |= bit(v);
            g.adj_[static_cast<std::size_t>(v)] |= bit(u);
        }
        g.recount_edges();
        return g;
    }

    /// Builds a graph directly from adjacency masks (must be symmetric, loop-free).
    static Graph from_adjacency(std::vector<VertexMask> adj) {
        int n = static_cast<int>(adj.size());
        if (n > max_order) throw std::invalid_argument("graph order exceeds supported maximum");
        Graph g;
        g.n_ = n;
        g.adj_ = std::move(adj);
        for (int v = 0; v < n; ++v) {
            if (g.adj_[static_cast<std::size_t>(v)] & bit(v))
                throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(v));
            if (g.adj_[static_cast<std::size_t>(v)] & ~low_bits(n))
                throw std::invalid_argument("adjacency mask out of range");
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (bool(g.adj_[static_cast<std::size_t>(u)] & bit(v)) !=
                    bool(g.adj_[static_cast<std::size_t>(v)] & bit(u)))
                    throw std::invalid_argument("adjacency not symmetric");
        g.recount_edges();
        return g;
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    VertexMask adjacency_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexMask closed_neighborhood_mask(int v) const { return adjacency_mask(v) | bit(v); }

    VertexMask vertex_mask() const { return low_bits(n_); }

    int degree(int v) const { return popcount(adjacency_mask(v)); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for_each_bit(adjacency_mask(v), [&](int u) { out.push_back(u); });
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1),
                         [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
    void recount_edges() {
        int deg_sum = 0;
        for (auto m : adj_) deg_sum += popcount(m);
        m_ = deg_sum / 2;
    }

    int n_ = 0;
    std::vector<VertexMask> adj_;
    int m_ = 0;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

/// N[v] as a sorted vertex list.
inline std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out;
    for_each_bit(g.closed_neighborhood_mask(v), [&](int u) { out.push_back(u); });
    return out;
}

inline int max_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("max_degree undefined for the empty graph");
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<VertexMask> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = ~g.adjacency_mask(v) & ~bit(v) & low_bits(n);
    return Graph::from_adjacency(std::move(adj));
}

/// Corona G∘H: G plus |V(G)| copies of H, copy j fully joined to vertex j of G.
/// Copy j occupies the contiguous block |V(G)| + j*|V(H)| .. + |V(H)|-1.
inline Graph corona_product(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    if (ng == 0 || nh == 0) throw std::invalid_argument("corona product requires nonempty factors");
    int n = ng * (1 + nh);
    if (n > Graph::max_order) throw std::invalid_argument("corona product order exceeds supported maximum");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int j = 0; j < ng; ++j) {
        int base = ng + j * nh;
        for (auto [u, v] : h.edges()) edges.emplace_back(base + u, base + v);
        for (int u = 0; u < nh; ++u) edges.emplace_back(j, base + u);
    }
    return Graph::from_edges(n, edges);
}

/// Strong product G⊠H with row-major vertex numbering (g-index, h-index).
inline Graph strong_product(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    if (ng == 0 || nh == 0) throw std::invalid_argument("strong product requires nonempty factors");
    int n = ng * nh;
    if (n > Graph::max_order) throw std::invalid_argument("strong product order exceeds supported maximum");
    std::vector<std::pair<int, int>> edges;
    auto id = [nh](int a, int b) { return a * nh + b; };
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            for (int a2 = a; a2 < ng; ++a2)
                for (int b2 = (a2 == a ? b + 1 : 0); b2 < nh; ++b2) {
                    bool ga = g.has_edge(a, a2);
                    bool hb = h.has_edge(b, b2);
                    if ((a == a2 && hb) || (b == b2 && ga) || (ga && hb))
                        edges.emplace_back(id(a, b), id(a2, b2));
                }
    return Graph::from_edges(n, edges);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices; ///< vertices[new_index] = original index
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexMask keep) {
    if (keep & ~g.vertex_mask()) throw std::invalid_argument("induced subgraph: vertex out of range");
    std::vector<int> verts;
    std::vector<int> newIdx(static_cast<std::size_t>(g.order()), -1);
    for_each_bit(keep, [&](int v) {
        newIdx[static_cast<std::size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for_each_bit(g.adjacency_mask(verts[static_cast<std::size_t>(i)]) & keep, [&](int w) {
            int j = newIdx[static_cast<std::size_t>(w)];
            if (i < j) edges.emplace_back(i, j);
        });
    return {Graph::from_edges(static_cast<int>(verts.size()), edges), std::move(verts)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    VertexMask m = 0;
    for (int v : keep) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("induced subgraph: vertex out of range");
        m |= bit(v);
    }
    return induced_subgraph(g, m);
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    VertexMask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen & bit(s)) continue;
        VertexMask comp = bit(s), frontier = bit(s);
        while (frontier) {
            VertexMask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.adjacency_mask(v); });
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        std::vector<int> verts;
        for_each_bit(comp, [&](int v) { verts.push_back(v); });
        comps.push_back(std::move(verts));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

/// Two-colorability check; fills side masks when bipartite.
inline bool bipartition(const Graph& g, VertexMask& left, VertexMask& right) {
    left = right = 0;
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(u)] == -1) {
                    side[static_cast<std::size_t>(u)] = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? left : right) |= bit(v);
    return true;
}

inline bool is_bipartite(const Graph& g) {
    VertexMask l, r;
    return bipartition(g, l, r);
}

/// Disjoint union; h's vertices are shifted past g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.order();
    if (ng + h.order() > Graph::max_order)
        throw std::invalid_argument("union order exceeds supported maximum");
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
    return Graph::from_edges(ng + h.order(), edges);
}

} // namespace mdc
