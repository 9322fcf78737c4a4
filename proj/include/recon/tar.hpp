#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "recon/feasibility.hpp"
#include "recon/graph.hpp"
#include "recon/params.hpp"

namespace recon {

/// The TAR reconfiguration graph of one parameter on one base graph: its
/// vertices are the feasible sets, two sets adjacent exactly when their
/// symmetric difference is a single vertex. Edges are never materialized;
/// neighbor queries flip one bit and probe the feasibility bitmap.
class TarGraph {
public:
    TarGraph(ParameterKind kind, Graph base)
        : kind_(kind), base_(std::move(base)), feas_(kind, base_) {
        require(base_.order() <= 20, Errc::order_too_large, "TAR construction is capped at base order 20");
        for (VertexSet s = 0; s <= full_set(base_.order()); ++s)
            if (feas_[s]) sets_.push_back(s);
        extremal_ = detail::extremal_sets_from_map(direction_of(kind_), base_.order(), feas_);
        values_ = values_from_extremal(kind_, extremal_);
    }

    ParameterKind kind() const { return kind_; }
    Direction direction() const { return direction_of(kind_); }
    const Graph& base() const { return base_; }
    int base_order() const { return base_.order(); }

    const std::vector<VertexSet>& sets() const { return sets_; }
    long order() const { return static_cast<long>(sets_.size()); }
    bool has_set(VertexSet s) const { return feas_[s]; }

    int index_of(VertexSet s) const {
        auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
        return it != sets_.end() && *it == s ? static_cast<int>(it - sets_.begin()) : -1;
    }

    int degree(VertexSet s) const {
        int d = 0;
        for (int v = 0; v < base_.order(); ++v)
            if (feas_[s ^ vbit(v)]) ++d;
        return d;
    }

    std::vector<VertexSet> neighbors(VertexSet s) const {
        std::vector<VertexSet> out;
        for (int v = 0; v < base_.order(); ++v)
            if (feas_[s ^ vbit(v)]) out.push_back(s ^ vbit(v));
        return out;
    }

    const ParameterValues& values() const { return values_; }
    const std::vector<VertexSet>& extremal_sets() const { return extremal_; }

private:
    ParameterKind kind_;
    Graph base_;
    FeasibilityMap feas_;
    std::vector<VertexSet> sets_;
    std::vector<VertexSet> extremal_;
    ParameterValues values_{};
};

inline TarGraph build_tar(ParameterKind kind, const Graph& g) { return TarGraph(kind, g); }

/// A small explicit graph whose vertices carry set labels; used for slices,
/// token-jumping graphs, and as hamilton-search input.
struct SetGraph {
    std::vector<VertexSet> labels;
    std::vector<std::vector<int>> adj;
    int order() const { return static_cast<int>(labels.size()); }
};

namespace detail {

inline SetGraph set_graph_from_masks(std::vector<VertexSet> masks) {
    std::sort(masks.begin(), masks.end());
    SetGraph sg;
    sg.labels = std::move(masks);
    sg.adj.assign(sg.labels.size(), {});
    for (std::size_t i = 0; i < sg.labels.size(); ++i)
        for (std::size_t j = i + 1; j < sg.labels.size(); ++j)
            if (card(sg.labels[i] ^ sg.labels[j]) == 1) {
                sg.adj[i].push_back(static_cast<int>(j));
                sg.adj[j].push_back(static_cast<int>(i));
            }
    return sg;
}

}  // namespace detail

inline SetGraph to_set_graph(const TarGraph& tar) { return detail::set_graph_from_masks(tar.sets()); }

/// Slice of the TAR graph: sets of cardinality at most k for minimizing
/// parameters, at least k for maximizing ones.
inline SetGraph k_slice(const TarGraph& tar, int k) {
    require(k >= 0 && k <= tar.base_order(), Errc::bad_argument, "slice index out of range");
    std::vector<VertexSet> masks;
    for (VertexSet s : tar.sets())
        if (tar.direction() == Direction::x_min ? card(s) <= k : card(s) >= k) masks.push_back(s);
    return detail::set_graph_from_masks(std::move(masks));
}

/// Token jumping: feasible sets of size exactly k, adjacent when one vertex
/// is exchanged.
inline SetGraph build_tj(ParameterKind kind, const Graph& g, int k) {
    TarGraph tar(kind, g);
    std::vector<VertexSet> masks;
    for (VertexSet s : tar.sets())
        if (card(s) == k) masks.push_back(s);
    std::sort(masks.begin(), masks.end());
    SetGraph sg;
    sg.labels = std::move(masks);
    sg.adj.assign(sg.labels.size(), {});
    for (std::size_t i = 0; i < sg.labels.size(); ++i)
        for (std::size_t j = i + 1; j < sg.labels.size(); ++j)
            if (card(sg.labels[i] ^ sg.labels[j]) == 2) {
                sg.adj[i].push_back(static_cast<int>(j));
                sg.adj[j].push_back(static_cast<int>(i));
            }
    return sg;
}

/// Component id per vertex, ids dense from 0 in first-seen order.
inline std::vector<int> graph_components(const SetGraph& sg) {
    std::vector<int> comp(sg.labels.size(), -1);
    int next = 0;
    for (std::size_t start = 0; start < sg.labels.size(); ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        std::vector<int> stack = {static_cast<int>(start)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sg.adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

struct ConnectivityProfile {
    ParameterKind kind;
    Direction direction;
    int n;
    std::vector<char> connected;  // index k = 0..n; empty slices count as disconnected
    int stable_threshold;  // x0: least k0 with all k >= k0 connected; y0: greatest k0 with all k <= k0 connected
    int first_threshold;   // underline-x0: least connected k; overline-y0: greatest connected k
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// connectivity of the slice {S feasible : card(S) in [lo, hi]}
inline bool slice_connected(const TarGraph& tar, int lo, int hi) {
    std::vector<VertexSet> members;
    for (VertexSet s : tar.sets()) {
        int c = card(s);
        if (c >= lo && c <= hi) members.push_back(s);
    }
    if (members.empty()) return false;
    if (members.size() == 1) return true;
    UnionFind uf(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int v = 0; v < tar.base_order(); ++v) {
            VertexSet t = members[i] ^ vbit(v);
            int c = card(t);
            if (c < lo || c > hi || !tar.has_set(t)) continue;
            auto it = std::lower_bound(members.begin(), members.end(), t);
            uf.unite(static_cast<int>(i), static_cast<int>(it - members.begin()));
        }
    int root = uf.find(0);
    for (std::size_t i = 1; i < members.size(); ++i)
        if (uf.find(static_cast<int>(i)) != root) return false;
    return true;
}

}  // namespace detail

inline ConnectivityProfile connectivity_profile(const TarGraph& tar) {
    int n = tar.base_order();
    ConnectivityProfile p{tar.kind(), tar.direction(), n, std::vector<char>(static_cast<std::size_t>(n) + 1, 0), 0, 0};
    for (int k = 0; k <= n; ++k) {
        bool ok = tar.direction() == Direction::x_min ? detail::slice_connected(tar, 0, k)
                                                      : detail::slice_connected(tar, k, n);
        p.connected[static_cast<std::size_t>(k)] = ok ? 1 : 0;
    }
    if (tar.direction() == Direction::x_min) {
        p.stable_threshold = n;
        for (int k = n; k >= 0 && p.connected[static_cast<std::size_t>(k)]; --k) p.stable_threshold = k;
        p.first_threshold = n;
        for (int k = 0; k <= n; ++k)
            if (p.connected[static_cast<std::size_t>(k)]) {
                p.first_threshold = k;
                break;
            }
    } else {
        p.stable_threshold = 0;
        for (int k = 0; k <= n && p.connected[static_cast<std::size_t>(k)]; ++k) p.stable_threshold = k;
        p.first_threshold = 0;
        for (int k = n; k >= 0; --k)
            if (p.connected[static_cast<std::size_t>(k)]) {
                p.first_threshold = k;
                break;
            }
    }
    return p;
}

struct DegreeStats {
    int max_degree;
    int min_degree;
};

inline DegreeStats degree_stats(const TarGraph& tar) {
    DegreeStats d{0, tar.base_order() + 1};
    for (VertexSet s : tar.sets()) {
        int deg = tar.degree(s);
        d.max_degree = std::max(d.max_degree, deg);
        d.min_degree = std::min(d.min_degree, deg);
    }
    return d;
}

/// Maximum dimension of an induced hypercube in the TAR graph: n - X(G).
inline int hypercube_dimension(const TarGraph& tar) {
    require(tar.direction() == Direction::x_min, Errc::wrong_direction,
            "hypercube dimension is defined for minimizing parameters");
    return tar.base_order() - tar.values().value;
}

/// Confirms the dimension by searching induced intervals [S, S + W]: every
/// induced hypercube in a TAR graph is such an interval, and the interval is
/// induced exactly when all sets between its ends are feasible.
inline int hypercube_dimension_verified(const TarGraph& tar) {
    require(tar.direction() == Direction::x_min, Errc::wrong_direction,
            "hypercube dimension is defined for minimizing parameters");
    require(tar.base_order() <= 6, Errc::order_too_large, "interval search is capped at base order 6");
    int best = -1;
    for (VertexSet s : tar.sets()) {
        VertexSet rest = tar.base().vertices() & ~s;
        // all subsets w of rest with [s, s|w] fully feasible
        for (VertexSet w = rest;; w = (w - 1) & rest) {
            bool all = true;
            for (VertexSet u = w;; u = (u - 1) & w) {
                if (!tar.has_set(s | u)) {
                    all = false;
                    break;
                }
                if (u == 0) break;
            }
            if (all) best = std::max(best, card(w));
            if (w == 0) break;
        }
    }
    return best;
}

/// Articulation points of the TAR graph, as set labels.
inline std::vector<VertexSet> cut_vertices(const TarGraph& tar) {
    SetGraph sg = to_set_graph(tar);
    int n = sg.order();
    std::vector<int> depth(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> cuts;
    // iterative dfs
    struct Frame {
        int v, parent;
        std::size_t next_edge;
        int children = 0;
        bool is_cut = false;
    };
    for (int start = 0; start < n; ++start) {
        if (depth[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<Frame> stack;
        stack.push_back({start, -1, 0});
        depth[static_cast<std::size_t>(start)] = 0;
        low[static_cast<std::size_t>(start)] = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_edge < sg.adj[static_cast<std::size_t>(f.v)].size()) {
                int w = sg.adj[static_cast<std::size_t>(f.v)][f.next_edge++];
                if (w == f.parent) continue;
                if (depth[static_cast<std::size_t>(w)] >= 0) {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], depth[static_cast<std::size_t>(w)]);
                } else {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(f.v)] + 1;
                    low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
                    stack.push_back({w, f.v, 0});
                }
            } else {
                bool root = f.parent < 0;
                if (root && f.children >= 2) f.is_cut = true;
                if (f.is_cut) cuts.push_back(sg.labels[static_cast<std::size_t>(f.v)]);
                int v = f.v, parent = f.parent;
                int lv = low[static_cast<std::size_t>(v)];
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& pf = stack.back();
                    ++pf.children;
                    low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], lv);
                    if (pf.parent >= 0 && lv >= depth[static_cast<std::size_t>(parent)]) pf.is_cut = true;
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

/// Whether S -> S xor R permutes the feasible family (it preserves adjacency
/// automatically, so this decides whether it is a TAR automorphism).
inline bool nu_automorphism_check(const TarGraph& tar, VertexSet r) {
    require(tar.direction() == Direction::x_min, Errc::wrong_direction,
            "the xor map is an automorphism criterion for minimizing parameters");
    for (VertexSet s : tar.sets())
        if (!tar.has_set(s ^ r)) return false;
    return true;
}

/// TAR graph as a plain Graph; requires at most 32 TAR vertices.
inline Graph tar_as_graph(const TarGraph& tar) {
    require(tar.order() >= 1 && tar.order() <= max_order, Errc::order_too_large,
            "TAR graph has more than 32 vertices");
    Graph g(static_cast<int>(tar.order()));
    const auto& sets = tar.sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (card(sets[i] ^ sets[j]) == 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

}  // namespace recon
