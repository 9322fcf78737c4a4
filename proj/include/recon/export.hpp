#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "recon/graph.hpp"
#include "recon/tar.hpp"

namespace recon {

/// Brace notation, e.g. "{0,2,3}"; the empty set prints as "{}".
inline std::string set_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

inline VertexSet parse_set_string(std::string_view text) {
    require(text.size() >= 2 && text.front() == '{' && text.back() == '}', Errc::bad_argument,
            "vertex set must be brace-delimited");
    VertexSet s = 0;
    int value = -1;
    for (char c : text.substr(1, text.size() - 2)) {
        if (c >= '0' && c <= '9') {
            value = (value < 0 ? 0 : value * 10) + (c - '0');
        } else if (c == ',') {
            require(value >= 0 && value < max_order, Errc::bad_argument, "bad vertex in set literal");
            s |= vbit(value);
            value = -1;
        } else {
            fail(Errc::bad_argument, "bad character in set literal");
        }
    }
    if (value >= 0) {
        require(value < max_order, Errc::bad_argument, "bad vertex in set literal");
        s |= vbit(value);
    }
    return s;
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

inline std::string to_dot(const SetGraph& sg, std::string_view name = "TAR") {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int v = 0; v < sg.order(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + set_to_string(sg.labels[static_cast<std::size_t>(v)]) + "\"];\n";
    for (int v = 0; v < sg.order(); ++v)
        for (int w : sg.adj[static_cast<std::size_t>(v)])
            if (v < w) out += "  " + std::to_string(v) + " -- " + std::to_string(w) + ";\n";
    return out + "}\n";
}

inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string to_edge_list(const SetGraph& sg) {
    std::string out;
    for (int v = 0; v < sg.order(); ++v)
        for (int w : sg.adj[static_cast<std::size_t>(v)])
            if (v < w) out += std::to_string(v) + " " + std::to_string(w) + "\n";
    return out;
}

/// Edge-list text "u v" per line, optionally preceded by "n <order>".
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string tok;
    std::vector<long> numbers;
    while (in >> tok) {
        if (tok == "n") {
            in >> n;
            continue;
        }
        numbers.push_back(std::stol(tok));
    }
    require(numbers.size() % 2 == 0, Errc::bad_argument, "edge list must contain vertex pairs");
    for (std::size_t i = 0; i < numbers.size(); i += 2) {
        int u = static_cast<int>(numbers[i]), v = static_cast<int>(numbers[i + 1]);
        n = std::max(n, std::max(u, v) + 1);
        edges.emplace_back(u, v);
    }
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace recon
