#include <catch2/catch_amalgamated.hpp>

#include "recon/generate.hpp"
#include "recon/graph6.hpp"

using namespace recon;

namespace {

// Reference encoder written directly from the format description,
// independent of the library implementation: order byte n+63, then the
// column-wise upper triangle packed big-endian six bits per byte.
std::string reference_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
    auto has_edge = [&](int i, int j) {
        for (auto [u, v] : edges)
            if ((u == i && v == j) || (u == j && v == i)) return true;
        return false;
    };
    std::string record(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                record.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) record.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return record;
}

}  // namespace

TEST_CASE("graph6 encodings match an independent reference encoder") {
    CHECK(reference_graph6(2, {{0, 1}}) == "A_");
    CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(reference_graph6(1, {}) == "@");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(reference_graph6(3, {}) == "B?");

    // every graph of order <= 5 agrees with the reference encoder
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : generate_nonisomorphic(n))
            CHECK(write_graph6(g) == reference_graph6(g.order(), g.edges()));
}

TEST_CASE("graph6 parsing recovers order and edges") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph e3 = parse_graph6("B?");
    CHECK(e3.order() == 3);
    CHECK(e3.edge_count() == 0);

    CHECK(parse_graph6(">>graph6<<A_") == k2);
    CHECK(parse_graph6("A_\n") == k2);
}

TEST_CASE("graph6 round trip is the identity") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : generate_nonisomorphic(n)) {
            std::string record = write_graph6(g);
            CHECK(parse_graph6(record) == g);
            CHECK(write_graph6(parse_graph6(record)) == record);
        }
}

TEST_CASE("graph6 rejects malformed records") {
    CHECK_THROWS_MATCHES(parse_graph6("A"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::truncated; }));
    CHECK_THROWS_MATCHES(parse_graph6("D!!"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::invalid_char; }));
    CHECK_THROWS_MATCHES(parse_graph6("a?????"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::order_too_large;
                         }));
    CHECK_THROWS_MATCHES(parse_graph6("~??"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::order_too_large;
                         }));
}
