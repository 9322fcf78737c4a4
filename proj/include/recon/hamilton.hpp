#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "recon/tar.hpp"

namespace recon {

enum class HamiltonMode { path, cycle };

struct HamiltonResult {
    enum class Verdict { yes, no, unknown };
    Verdict verdict = Verdict::no;
    std::vector<int> witness;  // vertex ordering when verdict is yes
    std::uint64_t nodes_explored = 0;
};

namespace detail {

inline std::optional<std::vector<int>> two_coloring(const SetGraph& sg) {
    std::vector<int> color(sg.labels.size(), -1);
    for (std::size_t start = 0; start < sg.labels.size(); ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> stack = {static_cast<int>(start)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sg.adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

struct HamiltonSearch {
    const SetGraph& sg;
    HamiltonMode mode;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<char> visited;
    std::vector<int> remaining;  // unvisited-neighbor counts
    std::vector<int> order;
    int start = 0;

    HamiltonSearch(const SetGraph& g, HamiltonMode m, std::uint64_t b)
        : sg(g), mode(m), budget(b), visited(g.labels.size(), 0), remaining(g.labels.size(), 0) {}

    bool run_from(int s) {
        start = s;
        std::fill(visited.begin(), visited.end(), 0);
        for (std::size_t v = 0; v < sg.labels.size(); ++v) remaining[v] = static_cast<int>(sg.adj[v].size());
        order.clear();
        take(s);
        bool found = extend(s);
        if (!found) untake(s);
        return found;
    }

    void take(int v) {
        visited[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        for (int w : sg.adj[static_cast<std::size_t>(v)]) --remaining[static_cast<std::size_t>(w)];
    }

    void untake(int v) {
        visited[static_cast<std::size_t>(v)] = 0;
        order.pop_back();
        for (int w : sg.adj[static_cast<std::size_t>(v)]) ++remaining[static_cast<std::size_t>(w)];
    }

    bool extend(int tail) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (order.size() == sg.labels.size()) {
            if (mode == HamiltonMode::path) return true;
            for (int w : sg.adj[static_cast<std::size_t>(tail)])
                if (w == start) return true;
            return false;
        }
        // a stranded unvisited vertex (no unvisited neighbor and not next to
        // the tail) can never be picked up
        for (std::size_t w = 0; w < sg.labels.size(); ++w)
            if (!visited[w] && remaining[w] == 0) {
                bool next_to_tail = false;
                for (int x : sg.adj[w])
                    if (x == tail) next_to_tail = true;
                if (!next_to_tail) return false;
            }
        if (mode == HamiltonMode::cycle && remaining[static_cast<std::size_t>(start)] == 0) {
            bool tail_adj_start = false;
            for (int x : sg.adj[static_cast<std::size_t>(start)])
                if (x == tail) tail_adj_start = true;
            if (!tail_adj_start) return false;
        }
        std::vector<int> nexts;
        for (int w : sg.adj[static_cast<std::size_t>(tail)])
            if (!visited[static_cast<std::size_t>(w)]) nexts.push_back(w);
        std::sort(nexts.begin(), nexts.end(), [&](int a, int b) {
            return remaining[static_cast<std::size_t>(a)] != remaining[static_cast<std::size_t>(b)]
                       ? remaining[static_cast<std::size_t>(a)] < remaining[static_cast<std::size_t>(b)]
                       : a < b;
        });
        for (int w : nexts) {
            take(w);
            if (extend(w)) return true;
            untake(w);
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Exact backtracking search with bipartite parity pruning and a node
/// budget. Yes/no verdicts are exact; unknown is returned only when the
/// budget ran out.
inline HamiltonResult hamilton_search(const SetGraph& sg, HamiltonMode mode,
                                      std::uint64_t budget = 100'000'000) {
    HamiltonResult result;
    int n = sg.order();
    if (n == 0) return result;
    if (n == 1) {
        if (mode == HamiltonMode::path) return {HamiltonResult::Verdict::yes, {0}, 0};
        return result;
    }
    if (mode == HamiltonMode::cycle && n < 3) return result;

    std::vector<int> comp = graph_components(sg);
    for (int c : comp)
        if (c != 0) return result;

    int deg1 = 0;
    for (const auto& nbrs : sg.adj)
        if (nbrs.size() <= 1) ++deg1;
    if (mode == HamiltonMode::cycle && deg1 > 0) return result;
    if (mode == HamiltonMode::path && deg1 > 2) return result;

    std::optional<std::vector<int>> coloring = detail::two_coloring(sg);
    int class0 = 0;
    if (coloring) {
        for (int c : *coloring) class0 += c == 0 ? 1 : 0;
        int class1 = n - class0;
        int imbalance = std::abs(class0 - class1);
        if (mode == HamiltonMode::cycle && imbalance != 0) return result;
        if (mode == HamiltonMode::path && imbalance > 1) return result;
    }

    detail::HamiltonSearch search(sg, mode, budget);
    std::vector<int> starts;
    if (mode == HamiltonMode::cycle) {
        starts = {0};
    } else {
        for (int v = 0; v < n; ++v)
            if (sg.adj[static_cast<std::size_t>(v)].size() == 1) starts.push_back(v);
        if (starts.empty()) {
            // endpoints of an odd-length-vertex path lie in the larger class
            for (int v = 0; v < n; ++v) {
                if (coloring) {
                    int bigger = class0 >= n - class0 ? 0 : 1;
                    if (class0 != n - class0 && (*coloring)[static_cast<std::size_t>(v)] != bigger) continue;
                }
                starts.push_back(v);
            }
        }
    }
    for (int s : starts) {
        if (search.run_from(s)) {
            result.verdict = HamiltonResult::Verdict::yes;
            result.witness = search.order;
            result.nodes_explored = search.nodes;
            return result;
        }
        if (search.exhausted) break;
    }
    result.verdict = search.exhausted ? HamiltonResult::Verdict::unknown : HamiltonResult::Verdict::no;
    result.nodes_explored = search.nodes;
    return result;
}

}  // namespace recon
