#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/feasibility.hpp"
#include "recon/tar.hpp"

namespace recon {

namespace detail {

struct SetSystemSearch {
    int n;
    const std::vector<VertexSet>& a;
    std::vector<VertexSet> b_sorted;
    std::vector<std::array<int, max_order + 1>> sig_a, sig_b;  // per vertex, count of sets per size
    std::vector<std::array<int, max_order>> cooc_a, cooc_b;    // pairwise membership counts
    std::vector<int> vertex_order;
    std::vector<int> image;
    VertexSet used = 0;

    SetSystemSearch(int order, const std::vector<VertexSet>& fa, const std::vector<VertexSet>& fb)
        : n(order), a(fa), b_sorted(fb) {
        std::sort(b_sorted.begin(), b_sorted.end());
        sig_a = signatures(fa);
        sig_b = signatures(fb);
        cooc_a = cooccurrence(fa);
        cooc_b = cooccurrence(fb);
        vertex_order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) vertex_order[static_cast<std::size_t>(v)] = v;
        // most constrained vertices first
        std::vector<int> cand_count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (sig_a[static_cast<std::size_t>(v)] == sig_b[static_cast<std::size_t>(w)]) ++cand_count[static_cast<std::size_t>(v)];
        std::sort(vertex_order.begin(), vertex_order.end(), [&](int x, int y) {
            return cand_count[static_cast<std::size_t>(x)] != cand_count[static_cast<std::size_t>(y)]
                       ? cand_count[static_cast<std::size_t>(x)] < cand_count[static_cast<std::size_t>(y)]
                       : x < y;
        });
        image.assign(static_cast<std::size_t>(n), -1);
    }

    std::vector<std::array<int, max_order + 1>> signatures(const std::vector<VertexSet>& family) const {
        std::vector<std::array<int, max_order + 1>> sig(static_cast<std::size_t>(n));
        for (auto& row : sig) row.fill(0);
        for (VertexSet s : family)
            for (int v : vertices_of(s)) ++sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(card(s))];
        return sig;
    }

    std::vector<std::array<int, max_order>> cooccurrence(const std::vector<VertexSet>& family) const {
        std::vector<std::array<int, max_order>> cooc(static_cast<std::size_t>(n));
        for (auto& row : cooc) row.fill(0);
        for (VertexSet s : family)
            for (int v : vertices_of(s))
                for (int w : vertices_of(s)) ++cooc[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        return cooc;
    }

    bool feasible_pair(int v, int w, std::size_t depth) const {
        if (sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) return false;
        for (std::size_t i = 0; i < depth; ++i) {
            int v2 = vertex_order[i];
            if (cooc_a[static_cast<std::size_t>(v)][static_cast<std::size_t>(v2)] !=
                cooc_b[static_cast<std::size_t>(w)][static_cast<std::size_t>(image[static_cast<std::size_t>(v2)])])
                return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == static_cast<std::size_t>(n)) return family_matches();
        int v = vertex_order[depth];
        for (int w = 0; w < n; ++w) {
            if (contains(used, w) || !feasible_pair(v, w, depth)) continue;
            image[static_cast<std::size_t>(v)] = w;
            used |= vbit(w);
            if (search(depth + 1)) return true;
            used &= ~vbit(w);
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    bool family_matches() const {
        std::vector<VertexSet> mapped;
        mapped.reserve(a.size());
        for (VertexSet s : a) {
            VertexSet t = 0;
            for (int v : vertices_of(s)) t |= vbit(image[static_cast<std::size_t>(v)]);
            mapped.push_back(t);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b_sorted;
    }
};

}  // namespace detail

/// A bijection of vertex labels carrying family `a` onto family `b`, if one
/// exists. Backtracking over vertex images with per-vertex membership
/// signatures and pairwise co-occurrence counts as pruning.
inline std::optional<std::vector<int>> setsystem_bijection(int n, const std::vector<VertexSet>& a,
                                                           const std::vector<VertexSet>& b) {
    if (a.size() != b.size()) return std::nullopt;
    detail::SetSystemSearch search(n, a, b);
    if (!search.search(0)) return std::nullopt;
    return search.image;
}

namespace detail {

// Canonical labeling for TAR graphs too large for the one-word Graph type:
// the same refinement-plus-backtracking scheme over dynamic bitset rows.
// High-symmetry inputs cost a leaf per automorphism, so the order is capped.
class SetGraphCanon {
public:
    explicit SetGraphCanon(const SetGraph& sg) : n_(sg.order()), words_((static_cast<std::size_t>(n_) + 63) / 64) {
        require(n_ >= 1, Errc::bad_argument, "empty graph");
        require(n_ <= 4096, Errc::order_too_large, "direct canonical labeling is capped at 4096 TAR vertices");
        rows_.assign(static_cast<std::size_t>(n_), std::vector<std::uint64_t>(words_, 0));
        for (int v = 0; v < n_; ++v)
            for (int w : sg.adj[static_cast<std::size_t>(v)])
                rows_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
    }

    std::string form() {
        std::vector<std::vector<int>> cells(1, std::vector<int>(static_cast<std::size_t>(n_)));
        for (int v = 0; v < n_; ++v) cells[0][static_cast<std::size_t>(v)] = v;
        search(std::move(cells));
        return best_;
    }

private:
    int count_in(int v, const std::vector<std::uint64_t>& splitter) const {
        int c = 0;
        for (std::size_t w = 0; w < words_; ++w)
            c += std::popcount(rows_[static_cast<std::size_t>(v)][w] & splitter[w]);
        return c;
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::vector<std::uint64_t> splitter(words_, 0);
                for (int v : cells[s]) splitter[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    std::map<int, std::vector<int>> buckets;
                    for (int v : cells[c]) buckets[count_in(v, splitter)].push_back(v);
                    if (buckets.size() <= 1) continue;
                    std::vector<std::vector<int>> replacement(cells.begin(), cells.begin() + static_cast<long>(c));
                    for (auto& [key, bucket] : buckets) replacement.push_back(std::move(bucket));
                    replacement.insert(replacement.end(), cells.begin() + static_cast<long>(c) + 1, cells.end());
                    cells.swap(replacement);
                    changed = true;
                    break;
                }
            }
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        int target = -1;
        std::size_t target_size = static_cast<std::size_t>(n_) + 1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < target_size) {
                target = static_cast<int>(i);
                target_size = cells[i].size();
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        for (int v : cells[static_cast<std::size_t>(target)]) {
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            search(std::move(next));
        }
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i) order[i] = cells[i][0];
        std::string enc;
        enc.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) / 16 + 8);
        int acc = 0, nbits = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                int u = order[static_cast<std::size_t>(i)], w = order[static_cast<std::size_t>(j)];
                bool edge = (rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1;
                acc = (acc << 1) | (edge ? 1 : 0);
                if (++nbits == 8) {
                    enc.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits) enc.push_back(static_cast<char>(acc << (8 - nbits)));
        if (best_.empty() || enc < best_) best_ = std::move(enc);
    }

    int n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::string best_;
};

}  // namespace detail

inline std::string set_graph_canonical_form(const SetGraph& sg) {
    return std::to_string(sg.order()) + ":" + detail::SetGraphCanon(sg).form();
}

enum class IsoMethod { automatic, setsystem, direct };

struct TarIsoResult {
    bool isomorphic = false;
    std::optional<std::vector<int>> relabeling;  // vertex map base(g) -> base(h), setsystem only
};

/// Setsystem needs a robust kind and, per direction, the K1 value that makes
/// the TAR graph determine the extremal family (minimizing: value 0 at K1 or
/// no isolated vertices; maximizing: value 1 at K1 or no isolated vertices).
inline bool setsystem_admissible(ParameterKind kind, const Graph& g, const Graph& h) {
    KindInfo info = kind_info(kind);
    if (!info.robust) return false;
    int exempt_value = info.direction == Direction::x_min ? 0 : 1;
    if (info.value_at_k1 == exempt_value) return true;
    return !g.has_isolated_vertex() && !h.has_isolated_vertex();
}

inline TarIsoResult tar_isomorphic(ParameterKind kind, const Graph& g, const Graph& h,
                                   IsoMethod method = IsoMethod::automatic) {
    if (method == IsoMethod::automatic)
        method = setsystem_admissible(kind, g, h) ? IsoMethod::setsystem : IsoMethod::direct;
    if (method == IsoMethod::setsystem) {
        require(setsystem_admissible(kind, g, h), Errc::method_precondition_violated,
                "setsystem method preconditions not met for this kind/graph pair");
        if (g.order() != h.order()) return {};
        auto fam_g = extremal_feasible_sets(kind, g);
        auto fam_h = extremal_feasible_sets(kind, h);
        if (auto bijection = setsystem_bijection(g.order(), fam_g, fam_h))
            return {true, std::move(bijection)};
        return {};
    }
    TarGraph tg(kind, g), th(kind, h);
    if (tg.order() != th.order()) return {};
    if (tg.order() <= max_order)
        return {canonical_form(tar_as_graph(tg)) == canonical_form(tar_as_graph(th)), std::nullopt};
    return {set_graph_canonical_form(to_set_graph(tg)) == set_graph_canonical_form(to_set_graph(th)),
            std::nullopt};
}

}  // namespace recon
