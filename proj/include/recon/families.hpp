#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Named graph constructions. Vertex numbering is fixed per family:
///   path/cycle      path (cycle) order 0..n-1
///   star            center 0, leaves 1..q
///   complete_bipartite   A = 0..p-1, B = p..p+q-1
///   complete_multipartite   parts in the given order, vertices consecutive
///   flower r,s      center 0; petal i adds s-1 vertices in cycle order
///   fullhouse       0 the degree-2 vertex, 3,4 the degree-4 pair, 1,2 the base
///   fh_twins r      fullhouse plus r-1 extra twins of vertex 0, appended
///   h_match r       cliques 0..r+1 and r+2..2r+3, matching i ~ i+r+2 (i < r)
///   h_twins r       the 8-vertex base on 0..7 (twins u1=6, u2=7), extra
///                   twins of u1 appended
///   gn n            hub vertices u_1..u_{n-1} = 0..n-2, then clique i's
///                   vertices v^i_1..v^i_n consecutively
///   k2q q,(inner)   inner keeps its labels; each inner edge, in ascending
///                   order, contributes q consecutive subdivision vertices
///   double_broom r,s,t   path 0..r-1, s leaves on 0, t leaves on r-1
///   half_graph s    clique x_1..x_s = 0..s-1, then y_1..y_s; x_i ~ y_j
///                   iff i+j <= s+1
///   corona (inner)  pendant of inner vertex v is vertex order(inner)+v
///   flower_of_triangles r   hub 0; triangle i on 3i+1,3i+2,3i+3 with 3i+1
///                   adjacent to the hub
struct FamilySpec {
    enum class Type {
        complete,
        empty,
        path,
        cycle,
        star,
        complete_bipartite,
        complete_multipartite,
        flower,
        fullhouse,
        fh_twins,
        h_match,
        h_twins,
        gn,
        k2q,
        double_broom,
        half_graph,
        corona,
        flower_of_triangles,
    };

    Type type = Type::complete;
    std::vector<int> args;
    std::shared_ptr<FamilySpec> inner;  // k2q and corona only
};

namespace detail {

inline Graph clique_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph fullhouse_graph() {
    return Graph::from_edges(5, {{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// Eight-vertex base of the twin family H_r: six core vertices plus the twin
// pair u1 = 6, u2 = 7 with N(u1) = N(u2) = {3,4,5}.
inline Graph h_twins_base() {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 5}, {4, 5}, {3, 4}, {0, 3}, {0, 5},
                                 {1, 5}, {1, 4}, {0, 4}, {2, 4}, {2, 3}, {1, 3},
                                 {4, 7}, {3, 7}, {5, 7}, {3, 6}, {4, 6}, {5, 6}});
}

inline void check_arg(bool ok, const std::string& what) {
    require(ok, Errc::bad_argument, "family argument out of range: " + what);
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
    using Type = FamilySpec::Type;
    const auto& a = spec.args;
    auto arity = [&](std::size_t k) {
        detail::check_arg(a.size() == k, "wrong argument count");
    };
    switch (spec.type) {
        case Type::complete:
            arity(1);
            detail::check_arg(a[0] >= 1, "complete needs n >= 1");
            return detail::clique_graph(a[0]);
        case Type::empty:
            arity(1);
            detail::check_arg(a[0] >= 1, "empty needs n >= 1");
            return Graph(a[0]);
        case Type::path:
            arity(1);
            detail::check_arg(a[0] >= 1, "path needs n >= 1");
            return detail::path_graph(a[0]);
        case Type::cycle: {
            arity(1);
            detail::check_arg(a[0] >= 3, "cycle needs n >= 3");
            Graph g = detail::path_graph(a[0]);
            g.add_edge(0, a[0] - 1);
            return g;
        }
        case Type::star: {
            arity(1);
            detail::check_arg(a[0] >= 1, "star needs q >= 1");
            Graph g(a[0] + 1);
            for (int v = 1; v <= a[0]; ++v) g.add_edge(0, v);
            return g;
        }
        case Type::complete_bipartite: {
            arity(2);
            detail::check_arg(a[0] >= 1 && a[1] >= 1, "complete_bipartite needs p,q >= 1");
            Graph g(a[0] + a[1]);
            for (int i = 0; i < a[0]; ++i)
                for (int j = 0; j < a[1]; ++j) g.add_edge(i, a[0] + j);
            return g;
        }
        case Type::complete_multipartite: {
            detail::check_arg(!a.empty(), "complete_multipartite needs at least one part");
            int n = 0;
            for (int p : a) {
                detail::check_arg(p >= 1, "part sizes must be >= 1");
                n += p;
            }
            Graph g(n);
            int start_i = 0;
            for (std::size_t pi = 0; pi < a.size(); ++pi) {
                int start_j = start_i + a[pi];
                for (std::size_t pj = pi + 1; pj < a.size(); ++pj) {
                    for (int i = 0; i < a[pi]; ++i)
                        for (int j = 0; j < a[pj]; ++j) g.add_edge(start_i + i, start_j + j);
                    start_j += a[pj];
                }
                start_i += a[pi];
            }
            return g;
        }
        case Type::flower: {
            arity(2);
            int r = a[0], s = a[1];
            detail::check_arg(r >= 2 && s >= 3, "flower needs r >= 2, s >= 3");
            Graph g(r * (s - 1) + 1);
            for (int p = 0; p < r; ++p) {
                int base = 1 + p * (s - 1);
                g.add_edge(0, base);
                for (int i = 0; i + 1 < s - 1; ++i) g.add_edge(base + i, base + i + 1);
                g.add_edge(base + s - 2, 0);
            }
            return g;
        }
        case Type::fullhouse:
            arity(0);
            return detail::fullhouse_graph();
        case Type::fh_twins: {
            arity(1);
            int r = a[0];
            detail::check_arg(r >= 1, "fh_twins needs r >= 1");
            Graph fh = detail::fullhouse_graph();
            Graph g(4 + r);
            for (auto [u, v] : fh.edges()) g.add_edge(u, v);
            for (int k = 1; k < r; ++k) {
                g.add_edge(4 + k, 3);
                g.add_edge(4 + k, 4);
            }
            return g;
        }
        case Type::h_match: {
            arity(1);
            int r = a[0];
            detail::check_arg(r >= 1 && 2 * r + 4 <= max_order, "h_match needs 1 <= r <= 14");
            int half = r + 2;
            Graph g(2 * half);
            for (int i = 0; i < half; ++i)
                for (int j = i + 1; j < half; ++j) {
                    g.add_edge(i, j);
                    g.add_edge(half + i, half + j);
                }
            for (int i = 0; i < r; ++i) g.add_edge(i, half + i);
            return g;
        }
        case Type::h_twins: {
            arity(1);
            int r = a[0];
            detail::check_arg(r >= 2 && r + 6 <= max_order, "h_twins needs 2 <= r <= 26");
            Graph base = detail::h_twins_base();
            Graph g(r + 6);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (int k = 3; k <= r; ++k)
                for (int w : {3, 4, 5}) g.add_edge(5 + k, w);
            return g;
        }
        case Type::gn: {
            arity(1);
            int n = a[0];
            detail::check_arg(n >= 3 && n * n + n - 1 <= max_order, "gn needs 3 <= n <= 5");
            Graph g(n * n + n - 1);
            auto hub = [&](int j) { return j - 1; };              // u_j, 1 <= j <= n-1
            auto vtx = [&](int i, int j) { return n - 1 + (i - 1) * n + (j - 1); };  // v^i_j
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j)
                    for (int p = j + 1; p <= n; ++p) g.add_edge(vtx(i, j), vtx(i, p));
                for (int j = 1; j <= n - 1; ++j) g.add_edge(vtx(i, j), hub(j));
            }
            return g;
        }
        case Type::k2q: {
            arity(1);
            int q = a[0];
            detail::check_arg(q >= 3, "k2q needs q >= 3");
            detail::check_arg(spec.inner != nullptr, "k2q needs an inner graph");
            Graph h = build_family(*spec.inner);
            detail::check_arg(h.order() >= 2 && is_connected(h), "k2q inner graph must be connected of order >= 2");
            auto edges = h.edges();
            int n = h.order() + q * static_cast<int>(edges.size());
            require(n <= max_order, Errc::order_too_large, "k2q order exceeds 32");
            Graph g(n);
            int next = h.order();
            for (auto [u, v] : edges)
                for (int k = 0; k < q; ++k, ++next) {
                    g.add_edge(next, u);
                    g.add_edge(next, v);
                }
            return g;
        }
        case Type::double_broom: {
            arity(3);
            int r = a[0], s = a[1], t = a[2];
            detail::check_arg(r >= 1 && s >= 1 && t >= 1, "double_broom needs r,s,t >= 1");
            Graph g(r + s + t);
            for (int i = 0; i + 1 < r; ++i) g.add_edge(i, i + 1);
            for (int i = 0; i < s; ++i) g.add_edge(0, r + i);
            for (int i = 0; i < t; ++i) g.add_edge(r - 1, r + s + i);
            return g;
        }
        case Type::half_graph: {
            arity(1);
            int s = a[0];
            detail::check_arg(s >= 1 && 2 * s <= max_order, "half_graph needs 1 <= s <= 16");
            Graph g(2 * s);
            for (int i = 1; i <= s; ++i)
                for (int j = i + 1; j <= s; ++j) g.add_edge(i - 1, j - 1);
            for (int i = 1; i <= s; ++i)
                for (int j = 1; j <= s; ++j)
                    if (i + j <= s + 1) g.add_edge(i - 1, s + j - 1);
            return g;
        }
        case Type::corona: {
            arity(0);
            detail::check_arg(spec.inner != nullptr, "corona needs an inner graph");
            Graph h = build_family(*spec.inner);
            require(2 * h.order() <= max_order, Errc::order_too_large, "corona order exceeds 32");
            Graph g(2 * h.order());
            for (auto [u, v] : h.edges()) g.add_edge(u, v);
            for (int v = 0; v < h.order(); ++v) g.add_edge(v, h.order() + v);
            return g;
        }
        case Type::flower_of_triangles: {
            arity(1);
            int r = a[0];
            detail::check_arg(r >= 1 && 3 * r + 1 <= max_order, "flower_of_triangles needs 1 <= r <= 10");
            Graph g(3 * r + 1);
            for (int i = 0; i < r; ++i) {
                int b = 3 * i + 1;
                g.add_edge(0, b);
                g.add_edge(b, b + 1);
                g.add_edge(b, b + 2);
                g.add_edge(b + 1, b + 2);
            }
            return g;
        }
    }
    fail(Errc::bad_argument, "unknown family");
}

namespace detail {

inline const std::vector<std::pair<std::string_view, FamilySpec::Type>>& family_names() {
    using Type = FamilySpec::Type;
    static const std::vector<std::pair<std::string_view, Type>> names = {
        {"complete", Type::complete},
        {"empty", Type::empty},
        {"path", Type::path},
        {"cycle", Type::cycle},
        {"star", Type::star},
        {"complete_bipartite", Type::complete_bipartite},
        {"complete_multipartite", Type::complete_multipartite},
        {"flower", Type::flower},
        {"fullhouse", Type::fullhouse},
        {"fh_twins", Type::fh_twins},
        {"h_match", Type::h_match},
        {"h_twins", Type::h_twins},
        {"gn", Type::gn},
        {"k2q", Type::k2q},
        {"double_broom", Type::double_broom},
        {"half_graph", Type::half_graph},
        {"corona", Type::corona},
        {"flower_of_triangles", Type::flower_of_triangles},
    };
    return names;
}

// splits "a,b,(c:d,e),f" at depth-zero commas
inline std::vector<std::string_view> split_args(std::string_view s) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

}  // namespace detail

/// Parses the `name:arg1,arg2` grammar; nested specs are parenthesized, e.g.
/// "k2q:4,(complete:3)" or "corona:(cycle:5)".
inline FamilySpec parse_family_spec(std::string_view text) {
    FamilySpec spec;
    std::string_view name = text;
    std::string_view argtext;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        argtext = text.substr(colon + 1);
    }
    bool known = false;
    for (const auto& [fname, ftype] : detail::family_names())
        if (fname == name) {
            spec.type = ftype;
            known = true;
            break;
        }
    require(known, Errc::bad_argument, "unknown family name: " + std::string(name));
    if (!argtext.empty()) {
        for (std::string_view part : detail::split_args(argtext)) {
            require(!part.empty(), Errc::bad_argument, "empty family argument");
            if (part.front() == '(') {
                require(part.back() == ')', Errc::bad_argument, "unbalanced parenthesis in family spec");
                require(spec.inner == nullptr, Errc::bad_argument, "at most one nested spec allowed");
                spec.inner = std::make_shared<FamilySpec>(parse_family_spec(part.substr(1, part.size() - 2)));
            } else {
                int value = 0;
                for (char c : part) {
                    require(c >= '0' && c <= '9', Errc::bad_argument,
                            "family argument is not a number: " + std::string(part));
                    value = value * 10 + (c - '0');
                }
                spec.args.push_back(value);
            }
        }
    }
    return spec;
}

inline Graph build_family(std::string_view spec_text) { return build_family(parse_family_spec(spec_text)); }

inline std::string to_string(const FamilySpec& spec) {
    std::string out;
    for (const auto& [fname, ftype] : detail::family_names())
        if (ftype == spec.type) out = std::string(fname);
    bool first = true;
    auto sep = [&]() -> std::string {
        if (first) {
            first = false;
            return ":";
        }
        return ",";
    };
    for (int v : spec.args) out += sep() + std::to_string(v);
    if (spec.inner) out += sep() + "(" + to_string(*spec.inner) + ")";
    return out;
}

}  // namespace recon
