#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recon/graph.hpp"
#include "recon/graph6.hpp"

namespace recon {

/// Canonical form of a graph: the graph6 record of a canonically relabeled
/// copy. Equal strings exactly for isomorphic graphs.
using CanonicalForm = std::string;

namespace detail {

// Equitable refinement of an ordered partition: repeatedly split every cell
// by the number of neighbors its vertices have in each cell, until stable.
// Sub-cells are ordered by ascending neighbor count so the result is
// label-independent.
inline void refine_partition(const Graph& g, std::vector<VertexSet>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            VertexSet splitter = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (card(cells[c]) <= 1) continue;
                // bucket by count of neighbors inside the splitter
                VertexSet buckets[max_order + 1] = {};
                int max_count = 0;
                for (int v : vertices_of(cells[c])) {
                    int k = card(g.neighbors(v) & splitter);
                    buckets[k] |= vbit(v);
                    if (k > max_count) max_count = k;
                }
                int nonempty = 0;
                for (int k = 0; k <= max_count; ++k)
                    if (buckets[k]) ++nonempty;
                if (nonempty <= 1) continue;
                std::vector<VertexSet> replacement;
                replacement.reserve(cells.size() + static_cast<std::size_t>(nonempty) - 1);
                for (std::size_t i = 0; i < c; ++i) replacement.push_back(cells[i]);
                for (int k = 0; k <= max_count; ++k)
                    if (buckets[k]) replacement.push_back(buckets[k]);
                for (std::size_t i = c + 1; i < cells.size(); ++i) replacement.push_back(cells[i]);
                cells.swap(replacement);
                changed = true;
                break;
            }
        }
    }
}

struct CanonicalSearch {
    const Graph& g;
    std::optional<std::string> best;
    std::vector<int> best_perm;

    explicit CanonicalSearch(const Graph& graph) : g(graph) {}

    void run(std::vector<VertexSet> cells) {
        refine_partition(g, cells);
        // first smallest non-singleton cell is the branch target
        int target = -1, target_size = max_order + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int sz = card(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = static_cast<int>(i);
                target_size = sz;
            }
        }
        if (target < 0) {
            leaf(cells);
            return;
        }
        for (int v : vertices_of(cells[static_cast<std::size_t>(target)])) {
            std::vector<VertexSet> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    next.push_back(vbit(v));
                    next.push_back(cells[i] & ~vbit(v));
                } else {
                    next.push_back(cells[i]);
                }
            }
            run(std::move(next));
        }
    }

    void leaf(const std::vector<VertexSet>& cells) {
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (std::size_t i = 0; i < cells.size(); ++i) perm[static_cast<std::size_t>(lowest_vertex(cells[i]))] = static_cast<int>(i);
        std::string enc = write_graph6(relabel(g, perm));
        if (!best || enc < *best) {
            best = std::move(enc);
            best_perm = std::move(perm);
        }
    }
};

}  // namespace detail

/// Permutation old->new realizing the canonical labeling.
inline std::vector<int> canonical_labeling(const Graph& g) {
    detail::CanonicalSearch search(g);
    search.run({g.vertices()});
    return search.best_perm;
}

inline CanonicalForm canonical_form(const Graph& g) {
    detail::CanonicalSearch search(g);
    search.run({g.vertices()});
    return *search.best;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace recon
