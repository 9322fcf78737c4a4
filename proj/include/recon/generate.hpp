#pragma once

#include <map>
#include <string>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/graph.hpp"

namespace recon {

enum class GraphFilter { all, no_isolated, connected };

inline bool passes_filter(const Graph& g, GraphFilter f) {
    switch (f) {
        case GraphFilter::all: return true;
        case GraphFilter::no_isolated: return !g.has_isolated_vertex();
        case GraphFilter::connected: return is_connected(g);
    }
    return true;
}

/// Extends every graph in `level` by one new highest-numbered vertex with
/// every possible neighborhood, keeping one canonical representative per
/// isomorphism class. Given all classes of order n, returns all classes of
/// order n+1, sorted by canonical form.
inline std::vector<Graph> extend_universe(const std::vector<Graph>& level) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& parent : level) {
        int n = parent.order();
        require(n + 1 <= max_order, Errc::order_too_large, "extension exceeds order 32");
        for (VertexSet nbrs = 0; nbrs <= full_set(n); ++nbrs) {
            Graph child(n + 1);
            for (auto [u, v] : parent.edges()) child.add_edge(u, v);
            for (int v : vertices_of(nbrs)) child.add_edge(n, v);
            CanonicalForm form = canonical_form(child);
            if (!next.contains(form)) next.emplace(std::move(form), relabel(child, canonical_labeling(child)));
        }
    }
    std::vector<Graph> out;
    out.reserve(next.size());
    for (auto& [form, g] : next) out.push_back(std::move(g));
    return out;
}

/// One canonical representative per isomorphism class of order n satisfying
/// the filter, in a deterministic (canonical-form) order. Built-in generation
/// stops at n = 7; larger universes must be supplied as graph6 streams.
inline std::vector<Graph> generate_nonisomorphic(int n, GraphFilter filter = GraphFilter::all) {
    require(n >= 1, Errc::bad_argument, "order must be at least 1");
    require(n <= 7, Errc::order_too_large,
            "built-in generation stops at order 7; supply a graph6 stream instead");
    std::vector<Graph> level = {Graph(1)};
    for (int k = 2; k <= n; ++k) level = extend_universe(level);
    std::vector<Graph> out;
    for (const Graph& g : level)
        if (passes_filter(g, filter)) out.push_back(g);
    return out;
}

}  // namespace recon
