#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "recon/graph.hpp"
#include "recon/params.hpp"

namespace recon {

inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    VertexSet out = s;
    for (int v : vertices_of(s)) out |= g.neighbors(v);
    return out;
}

enum class ForcingRule { standard, psd, skew };

namespace detail {

// standard rule: a blue vertex with exactly one white neighbor forces it;
// skew rule: any vertex with exactly one white neighbor forces it.
inline VertexSet chain_closure(const Graph& g, VertexSet blue, bool skew) {
    VertexSet white = g.vertices() & ~blue;
    bool changed = true;
    while (changed && white) {
        changed = false;
        VertexSet actors = skew ? g.vertices() : blue;
        for (int u : vertices_of(actors)) {
            VertexSet w = g.neighbors(u) & white;
            if (w && (w & (w - 1)) == 0) {
                blue |= w;
                white &= ~w;
                changed = true;
            }
        }
    }
    return blue;
}

// PSD rule: components of the white subgraph are forced independently; a
// blue vertex with exactly one white neighbor inside a component forces it.
// The white components are recomputed after every successful force.
inline VertexSet psd_closure(const Graph& g, VertexSet blue) {
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet white = g.vertices() & ~blue;
        VertexSet rest = white;
        while (rest && !changed) {
            VertexSet comp = vbit(lowest_vertex(rest));
            VertexSet frontier = comp;
            while (frontier) {
                VertexSet next = 0;
                for (int v : vertices_of(frontier)) next |= g.neighbors(v);
                next &= white & ~comp;
                comp |= next;
                frontier = next;
            }
            rest &= ~comp;
            for (int u : vertices_of(blue)) {
                VertexSet w = g.neighbors(u) & comp;
                if (w && (w & (w - 1)) == 0) {
                    blue |= w;
                    changed = true;
                    break;
                }
            }
        }
    }
    return blue;
}

}  // namespace detail

/// Final coloring of the given rule starting from `s` blue; a fixpoint that
/// contains `s` and is monotone in it.
inline VertexSet forcing_closure(ForcingRule rule, const Graph& g, VertexSet s) {
    switch (rule) {
        case ForcingRule::standard: return detail::chain_closure(g, s, false);
        case ForcingRule::skew: return detail::chain_closure(g, s, true);
        case ForcingRule::psd: return detail::psd_closure(g, s);
    }
    return s;
}

inline bool is_fort(const Graph& g, VertexSet f) {
    if (f == 0) return false;
    for (int v : vertices_of(g.vertices() & ~f))
        if (card(g.neighbors(v) & f) == 1) return false;
    return true;
}

/// True iff some fort F of g meets t exactly in {x}. Exhaustive over the
/// subsets of V minus t, plus x.
inline bool has_private_fort(const Graph& g, VertexSet t, int x) {
    require(contains(t, x), Errc::vertex_not_in_set, "x must lie in t");
    VertexSet freebits = g.vertices() & ~t;
    std::vector<int> free = set_to_indices(freebits);
    std::uint32_t limit = std::uint32_t{1} << free.size();
    for (std::uint32_t pick = 0; pick < limit; ++pick) {
        VertexSet f = vbit(x);
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((pick >> i) & 1) f |= vbit(free[i]);
        if (is_fort(g, f)) return true;
    }
    return false;
}

namespace detail {

inline bool irredundant(const Graph& g, VertexSet t) {
    for (int x : vertices_of(t)) {
        VertexSet others = 0;
        for (int y : vertices_of(t & ~vbit(x))) others |= g.closed_neighbors(y);
        if ((g.closed_neighbors(x) & ~others) == 0) return false;
    }
    return true;
}

inline bool zf_irredundant(const Graph& g, VertexSet t) {
    for (int x : vertices_of(t))
        if (!has_private_fort(g, t, x)) return false;
    return true;
}

}  // namespace detail

/// Exact feasibility predicate for each of the ten parameters. Skew forcing
/// treats isolated vertices as exempt (never forceable, never needed), which
/// realizes Z-(K1) = 0; the closure operator itself stays literal.
inline bool is_feasible(ParameterKind kind, const Graph& g, VertexSet s) {
    VertexSet all = g.vertices();
    switch (kind) {
        case ParameterKind::domination:
            return closed_neighborhood(g, s) == all;
        case ParameterKind::power_domination:
            return forcing_closure(ForcingRule::standard, g, closed_neighborhood(g, s)) == all;
        case ParameterKind::zero_forcing:
            return forcing_closure(ForcingRule::standard, g, s) == all;
        case ParameterKind::psd_forcing:
            return forcing_closure(ForcingRule::psd, g, s) == all;
        case ParameterKind::skew_forcing:
            return (forcing_closure(ForcingRule::skew, g, s) | g.isolated_vertices()) == all;
        case ParameterKind::vertex_cover: {
            for (int v : vertices_of(all & ~s))
                if (g.neighbors(v) & ~s) return false;
            return true;
        }
        case ParameterKind::connected_domination:
            require(is_connected(g), Errc::kind_unsupported_on_graph,
                    "connected domination is defined on connected base graphs only");
            return closed_neighborhood(g, s) == all && induced_connected(g, s);
        case ParameterKind::independence: {
            for (int v : vertices_of(s))
                if (g.neighbors(v) & s) return false;
            return true;
        }
        case ParameterKind::irredundance:
            return detail::irredundant(g, s);
        case ParameterKind::zf_irredundance:
            return detail::zf_irredundant(g, s);
    }
    return false;
}

/// Feasibility of every subset of V(G), one bit per subset mask.
class FeasibilityMap {
public:
    FeasibilityMap(ParameterKind kind, const Graph& g) : n_(g.order()) {
        require(n_ <= 20, Errc::order_too_large, "subset enumeration is capped at order 20");
        bits_.assign((std::size_t{1} << n_) / 64 + 1, 0);
        for (VertexSet s = 0; s <= full_set(n_); ++s)
            if (is_feasible(kind, g, s)) bits_[s >> 6] |= std::uint64_t{1} << (s & 63);
    }

    bool operator[](VertexSet s) const { return (bits_[s >> 6] >> (s & 63)) & 1; }
    int order() const { return n_; }

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

namespace detail {

// Under superset (or subset) closure, one-vertex perturbations certify
// minimality (maximality).
inline std::vector<VertexSet> extremal_sets_from_map(Direction dir, int n, const FeasibilityMap& feas) {
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s <= full_set(n); ++s) {
        if (!feas[s]) continue;
        bool extremal = true;
        if (dir == Direction::x_min) {
            for (int v : vertices_of(s))
                if (feas[s & ~vbit(v)]) {
                    extremal = false;
                    break;
                }
        } else {
            for (int v : vertices_of(full_set(n) & ~s))
                if (feas[s | vbit(v)]) {
                    extremal = false;
                    break;
                }
        }
        if (extremal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return card(a) != card(b) ? card(a) < card(b) : a < b;
    });
    return out;
}

}  // namespace detail

/// All minimal feasible sets (X kinds) or maximal feasible sets (Y kinds),
/// sorted by cardinality then mask.
inline std::vector<VertexSet> extremal_feasible_sets(ParameterKind kind, const Graph& g) {
    FeasibilityMap feas(kind, g);
    return detail::extremal_sets_from_map(direction_of(kind), g.order(), feas);
}

inline ParameterValues values_from_extremal(ParameterKind kind, const std::vector<VertexSet>& extremal) {
    require(!extremal.empty(), Errc::kind_unsupported_on_graph, "no feasible set exists");
    int lo = max_order + 1, hi = -1;
    for (VertexSet s : extremal) {
        lo = std::min(lo, card(s));
        hi = std::max(hi, card(s));
    }
    if (is_x_kind(kind)) return {kind, lo, hi};
    return {kind, hi, lo};
}

inline ParameterValues parameter_values(ParameterKind kind, const Graph& g) {
    return values_from_extremal(kind, extremal_feasible_sets(kind, g));
}

/// X direction: vertices in no minimal set; Y direction: vertices in every
/// maximal set.
inline VertexSet irrelevant_vertices(ParameterKind kind, const Graph& g) {
    std::vector<VertexSet> extremal = extremal_feasible_sets(kind, g);
    if (is_x_kind(kind)) {
        VertexSet used = 0;
        for (VertexSet s : extremal) used |= s;
        return g.vertices() & ~used;
    }
    VertexSet common = g.vertices();
    for (VertexSet s : extremal) common &= s;
    return common;
}

/// Deletes a leaf and its neighbor until no leaf remains; returns the mask of
/// surviving vertices (empty exactly when the skew closure of the empty set
/// is everything). Always strips the lowest-numbered leaf first.
inline VertexSet leaf_strip(const Graph& g) {
    VertexSet alive = g.vertices();
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int v : vertices_of(alive)) {
            VertexSet nbrs = g.neighbors(v) & alive;
            if (card(nbrs) == 1) {
                alive &= ~(vbit(v) | nbrs);
                stripped = true;
                break;
            }
        }
    }
    return alive;
}

/// The residual as a graph, or nothing when stripping consumed every vertex.
inline std::optional<Graph> leaf_strip_graph(const Graph& g) {
    VertexSet alive = leaf_strip(g);
    if (!alive) return std::nullopt;
    return induced_subgraph(g, alive);
}

/// No induced even cycle of length >= 4. Exhaustive: a subset induces a
/// cycle iff it is connected and 2-regular in the induced subgraph.
inline bool is_even_hole_free(const Graph& g) {
    require(g.order() <= 12, Errc::order_too_large, "even-hole search is capped at order 12");
    for (VertexSet s = 0; s <= full_set(g.order()); ++s) {
        int k = card(s);
        if (k < 4 || k % 2) continue;
        bool two_regular = true;
        for (int v : vertices_of(s))
            if (card(g.neighbors(v) & s) != 2) {
                two_regular = false;
                break;
            }
        if (two_regular && induced_connected(g, s)) return false;
    }
    return true;
}

}  // namespace recon
