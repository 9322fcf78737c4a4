#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "recon/census.hpp"
#include "recon/families.hpp"

using namespace recon;

TEST_CASE("small-order census rows") {
    CHECK(run_census(ParameterKind::domination, 4).unique_count == 5);
    CHECK(run_census(ParameterKind::zero_forcing, 5).unique_count == 7);
    CHECK(run_census(ParameterKind::psd_forcing, 5).unique_count == 10);
    CHECK(run_census(ParameterKind::skew_forcing, 5).unique_count == 7);
    auto pd3 = run_census(ParameterKind::power_domination, 3);
    CHECK(pd3.universe_size == 2);
    CHECK(pd3.unique_count == 0);
}

TEST_CASE("census rows are identical across thread counts") {
    auto universe = census_universe(6);
    auto serial = uniqueness_classes(ParameterKind::domination, 6, universe, 1);
    auto parallel = uniqueness_classes(ParameterKind::domination, 6, universe, 4);
    CHECK(serial.row.unique_count == parallel.row.unique_count);
    CHECK(serial.classes == parallel.classes);
}

TEST_CASE("stream universes match the builtin ones") {
    std::stringstream stream;
    for (const Graph& g : census_universe(5)) stream << write_graph6(g) << "\n";
    auto from_stream = run_census(ParameterKind::domination, 5, stream);
    CHECK(from_stream.unique_count == run_census(ParameterKind::domination, 5).unique_count);
    CHECK(from_stream.universe_size == 23);
}

TEST_CASE("stream universes deduplicate and filter") {
    Graph p4 = build_family("path:4");
    std::vector<int> perm = {2, 0, 3, 1};
    std::stringstream stream;
    stream << write_graph6(p4) << "\n" << write_graph6(relabel(p4, perm)) << "\n"
           << write_graph6(build_family("path:5")) << "\n"
           << write_graph6(disjoint_union(build_family("path:3"), Graph(1))) << "\n";
    auto universe = census_universe(stream, 4);
    CHECK(universe.size() == 1);
}

TEST_CASE("order 8 requires a stream") {
    CHECK_THROWS_MATCHES(run_census(ParameterKind::domination, 8), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::source_required; }));
}

TEST_CASE("vertex cover classes are singletons at order 5") {
    auto result = uniqueness_classes(ParameterKind::vertex_cover, 5, census_universe(5));
    CHECK(result.row.unique_count == result.row.universe_size);
    for (const auto& cls : result.classes) CHECK(cls.size() == 1);
}
