#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "recon/error.hpp"

namespace recon {

/// A set of vertices of a base graph, one bit per vertex. Fits one word for
/// every graph this library handles (order at most 32), so symmetric
/// difference is a single xor and cardinality a single popcount.
using VertexSet = std::uint32_t;

constexpr int max_order = 32;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
constexpr int card(VertexSet s) { return std::popcount(s); }
constexpr VertexSet full_set(int n) {
    return n >= max_order ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Range over the vertices of a set, low bit first.
class VertexRange {
public:
    class iterator {
    public:
        explicit iterator(VertexSet s) : rest_(s) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        VertexSet rest_;
    };
    explicit VertexRange(VertexSet s) : set_(s) {}
    iterator begin() const { return iterator(set_); }
    iterator end() const { return iterator(0); }

private:
    VertexSet set_;
};

inline VertexRange vertices_of(VertexSet s) { return VertexRange(s); }

inline std::vector<int> set_to_indices(VertexSet s) {
    std::vector<int> out;
    for (int v : vertices_of(s)) out.push_back(v);
    return out;
}

inline VertexSet set_from_indices(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

/// Simple undirected graph on 1..32 vertices, adjacency stored as one
/// neighborhood mask per vertex. Immutable by convention once built.
class Graph {
public:
    explicit Graph(int n) {
        require(n >= 1, Errc::bad_argument, "graph order must be at least 1");
        require(n <= max_order, Errc::order_too_large,
                "graph order " + std::to_string(n) + " exceeds 32");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return full_set(order()); }

    void add_edge(int u, int v) {
        require(u >= 0 && u < order() && v >= 0 && v < order() && u != v, Errc::bad_argument,
                "bad edge endpoints");
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }

    bool adjacent(int u, int v) const { return contains(adj_[u], v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)] | vbit(v); }
    int degree(int v) const { return card(adj_[static_cast<std::size_t>(v)]); }

    int edge_count() const {
        int twice = 0;
        for (VertexSet row : adj_) twice += card(row);
        return twice / 2;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        int d = order();
        for (int v = 0; v < order(); ++v) d = std::min(d, degree(v));
        return d;
    }

    VertexSet isolated_vertices() const {
        VertexSet s = 0;
        for (int v = 0; v < order(); ++v)
            if (adj_[static_cast<std::size_t>(v)] == 0) s |= vbit(v);
        return s;
    }

    bool has_isolated_vertex() const { return isolated_vertices() != 0; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order(); ++u)
            for (int v : vertices_of(adj_[static_cast<std::size_t>(u)] & ~(full_set(u + 1))))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const = default;

private:
    std::vector<VertexSet> adj_;
};

/// Vertices reachable from `start` staying inside `within`.
inline VertexSet reachable(const Graph& g, int start, VertexSet within) {
    if (!contains(within, start)) return 0;
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : vertices_of(frontier)) next |= g.neighbors(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool induced_connected(const Graph& g, VertexSet s) {
    if (s == 0) return false;
    return reachable(g, lowest_vertex(s), s) == s;
}

inline bool is_connected(const Graph& g) { return induced_connected(g, g.vertices()); }

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet rest = g.vertices();
    while (rest) {
        VertexSet c = reachable(g, lowest_vertex(rest), rest);
        comps.push_back(c);
        rest &= ~c;
    }
    return comps;
}

/// Induced subgraph on `keep`; vertex i of the result is the i-th lowest
/// member of `keep`.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    require(keep != 0, Errc::bad_argument, "induced subgraph needs at least one vertex");
    std::vector<int> old_of = set_to_indices(keep);
    std::vector<int> new_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < old_of.size(); ++i) new_of[static_cast<std::size_t>(old_of[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(old_of.size()));
    for (std::size_t i = 0; i < old_of.size(); ++i)
        for (int w : vertices_of(g.neighbors(old_of[i]) & keep))
            if (new_of[static_cast<std::size_t>(w)] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), new_of[static_cast<std::size_t>(w)]);
    return h;
}

/// Relabel: vertex v of g becomes perm[v] of the result.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    require(g.order() + h.order() <= max_order, Errc::order_too_large,
            "union order exceeds 32");
    Graph r(g.order() + h.order());
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (auto [u, v] : h.edges()) r.add_edge(u + g.order(), v + g.order());
    return r;
}

/// Cartesian product with row-major pairing (i,j) -> i*order(h)+j.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    require(g.order() * h.order() <= max_order, Errc::order_too_large,
            "product order exceeds 32");
    int nh = h.order();
    Graph r(g.order() * nh);
    for (int i = 0; i < g.order(); ++i)
        for (auto [u, v] : h.edges()) r.add_edge(i * nh + u, i * nh + v);
    for (int j = 0; j < nh; ++j)
        for (auto [u, v] : g.edges()) r.add_edge(u * nh + j, v * nh + j);
    return r;
}

enum class CombineOp { disjoint_union, cartesian };

inline Graph combine(CombineOp op, const Graph& g, const Graph& h) {
    return op == CombineOp::disjoint_union ? disjoint_union(g, h) : cartesian_product(g, h);
}

}  // namespace recon
