#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// graph6: one printable ASCII record per graph. First byte is order+63
// (orders above 62 use a multi-byte form we reject as beyond our cap), then
// the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per byte, each byte offset by 63.

inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    require(!line.empty(), Errc::truncated, "empty graph6 record");

    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        require(c >= 63 && c <= 126, Errc::invalid_char,
                "graph6 byte out of range at position " + std::to_string(i));
    }
    require(line[0] != 126, Errc::order_too_large, "graph6 order exceeds 32");
    int n = line[0] - 63;
    require(n >= 1, Errc::invalid_char, "graph6 order byte encodes 0 vertices");
    require(n <= max_order, Errc::order_too_large,
            "graph6 order " + std::to_string(n) + " exceeds 32");

    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    require(static_cast<int>(line.size()) >= 1 + nbytes, Errc::truncated,
            "graph6 record too short for order " + std::to_string(n));
    require(static_cast<int>(line.size()) == 1 + nbytes, Errc::invalid_char,
            "graph6 record has trailing bytes");

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int sextet = line[static_cast<std::size_t>(1 + bit / 6)] - 63;
            if ((sextet >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::string body(static_cast<std::size_t>(nbytes), 0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) body[static_cast<std::size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

/// Reads every graph6 record from a stream, one per line; blank lines are
/// skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        out.push_back(parse_graph6(sv));
    }
    return out;
}

}  // namespace recon
