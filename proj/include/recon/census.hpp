#pragma once

#include <istream>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "recon/generate.hpp"
#include "recon/graph6.hpp"
#include "recon/tar_iso.hpp"

namespace recon {

struct CensusRow {
    ParameterKind kind;
    int order = 0;
    long universe_size = 0;
    long unique_count = 0;
    double ratio() const { return universe_size ? static_cast<double>(unique_count) / static_cast<double>(universe_size) : 0.0; }
};

enum class UniverseKind { no_isolated, all };

/// Built-in universe (one representative per class); the published tables
/// use the no-isolated-vertex universe for every kind.
inline std::vector<Graph> census_universe(int n, UniverseKind u = UniverseKind::no_isolated) {
    require(n <= 7, Errc::source_required,
            "built-in universes stop at order 7; order 8 must arrive as a graph6 stream");
    return generate_nonisomorphic(n, u == UniverseKind::no_isolated ? GraphFilter::no_isolated : GraphFilter::all);
}

/// Universe read from a graph6 stream: keeps order-n graphs passing the
/// filter and deduplicates up to isomorphism.
inline std::vector<Graph> census_universe(std::istream& graph6_stream, int n,
                                          UniverseKind u = UniverseKind::no_isolated) {
    std::map<CanonicalForm, Graph> classes;
    for (const Graph& g : read_graph6_stream(graph6_stream)) {
        if (g.order() != n) continue;
        if (u == UniverseKind::no_isolated && g.has_isolated_vertex()) continue;
        CanonicalForm form = canonical_form(g);
        if (!classes.contains(form)) classes.emplace(std::move(form), g);
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [form, g] : classes) out.push_back(std::move(g));
    return out;
}

namespace detail {

struct CensusPrep {
    std::vector<VertexSet> extremal;
    std::string key;  // permutation-invariant fingerprint; unequal keys cannot be TAR-isomorphic
};

inline CensusPrep census_prep(ParameterKind kind, const Graph& g) {
    int n = g.order();
    FeasibilityMap feas(kind, g);
    CensusPrep prep;
    prep.extremal = extremal_sets_from_map(direction_of(kind), n, feas);
    ParameterValues values = values_from_extremal(kind, prep.extremal);

    long tar_order = 0;
    std::vector<int> card_hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> degree_hist(static_cast<std::size_t>(n) + 1, 0);
    for (VertexSet s = 0; s <= full_set(n); ++s) {
        if (!feas[s]) continue;
        ++tar_order;
        ++card_hist[static_cast<std::size_t>(card(s))];
        int deg = 0;
        for (int v = 0; v < n; ++v)
            if (feas[s ^ vbit(v)]) ++deg;
        ++degree_hist[static_cast<std::size_t>(deg)];
    }
    std::vector<int> extremal_hist(static_cast<std::size_t>(n) + 1, 0);
    for (VertexSet s : prep.extremal) ++extremal_hist[static_cast<std::size_t>(card(s))];
    std::vector<std::string> vertex_sigs;
    for (int v = 0; v < n; ++v) {
        std::string sig;
        for (int k = 0; k <= n; ++k) {
            int count = 0;
            for (VertexSet s : prep.extremal)
                if (contains(s, v) && card(s) == k) ++count;
            sig += std::to_string(count) + ".";
        }
        vertex_sigs.push_back(std::move(sig));
    }
    std::sort(vertex_sigs.begin(), vertex_sigs.end());

    std::string& key = prep.key;
    auto append = [&key](long x) { key += std::to_string(x) + ","; };
    append(n);
    append(values.value);
    append(values.extremal);
    append(tar_order);
    append(static_cast<long>(prep.extremal.size()));
    for (int c : card_hist) append(c);
    for (int c : degree_hist) append(c);
    for (int c : extremal_hist) append(c);
    key += "|";
    for (const std::string& sig : vertex_sigs) key += sig + ";";
    return prep;
}

}  // namespace detail

struct UniquenessResult {
    CensusRow row;
    std::vector<std::vector<int>> classes;  // indices into the universe
};

/// Partition of the universe into TAR-isomorphism classes. Per-graph
/// preparation runs in parallel; class merging is a serial reduction over
/// the precomputed invariants, so the result is schedule-independent.
inline UniquenessResult uniqueness_classes(ParameterKind kind, int order,
                                           const std::vector<Graph>& universe, int threads = 1) {
    std::vector<detail::CensusPrep> prep(universe.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) prep[i] = detail::census_prep(kind, universe[i]);
    };
    if (threads <= 1 || universe.size() < 2) {
        work(0, universe.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (universe.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = static_cast<std::size_t>(t) * chunk;
            std::size_t end = std::min(universe.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    UniquenessResult result;
    result.row.kind = kind;
    result.row.order = order;
    result.row.universe_size = static_cast<long>(universe.size());
    std::unordered_map<std::string, std::vector<int>> buckets;  // key -> class ids
    for (std::size_t i = 0; i < universe.size(); ++i) {
        std::vector<int>& classes_here = buckets[prep[i].key];
        bool placed = false;
        for (int cls : classes_here) {
            int rep = result.classes[static_cast<std::size_t>(cls)].front();
            if (setsystem_bijection(universe[i].order(), prep[i].extremal,
                                    prep[static_cast<std::size_t>(rep)].extremal)) {
                result.classes[static_cast<std::size_t>(cls)].push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes_here.push_back(static_cast<int>(result.classes.size()));
            result.classes.push_back({static_cast<int>(i)});
        }
    }
    for (const auto& cls : result.classes)
        if (cls.size() == 1) ++result.row.unique_count;
    return result;
}

inline CensusRow run_census(ParameterKind kind, int n, const std::vector<Graph>& universe, int threads = 1) {
    return uniqueness_classes(kind, n, universe, threads).row;
}

/// Whether no universe member other than g itself (up to base isomorphism)
/// has a TAR graph isomorphic to g's.
inline bool unique_in_universe(ParameterKind kind, const Graph& g, const std::vector<Graph>& universe) {
    detail::CensusPrep mine = detail::census_prep(kind, g);
    CanonicalForm self = canonical_form(g);
    for (const Graph& other : universe) {
        if (other.order() != g.order()) continue;
        detail::CensusPrep theirs = detail::census_prep(kind, other);
        if (theirs.key != mine.key) continue;
        if (canonical_form(other) == self) continue;
        if (setsystem_bijection(g.order(), mine.extremal, theirs.extremal)) return false;
    }
    return true;
}

inline CensusRow run_census(ParameterKind kind, int n, int threads = 1) {
    return run_census(kind, n, census_universe(n), threads);
}

inline CensusRow run_census(ParameterKind kind, int n, std::istream& graph6_stream, int threads = 1,
                            UniverseKind u = UniverseKind::no_isolated) {
    return run_census(kind, n, census_universe(graph6_stream, n, u), threads);
}

}  // namespace recon
