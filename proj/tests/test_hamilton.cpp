#include <catch2/catch_amalgamated.hpp>

#include "recon/families.hpp"
#include "recon/hamilton.hpp"

using namespace recon;

namespace {

SetGraph tar_graph_of(ParameterKind kind, const char* spec) {
    return to_set_graph(TarGraph(kind, build_family(spec)));
}

void check_witness(const SetGraph& sg, const HamiltonResult& r, HamiltonMode mode) {
    REQUIRE(r.verdict == HamiltonResult::Verdict::yes);
    REQUIRE(r.witness.size() == static_cast<std::size_t>(sg.order()));
    std::vector<char> seen(static_cast<std::size_t>(sg.order()), 0);
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        int v = r.witness[i];
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = 1;
        if (i + 1 < r.witness.size())
            CHECK(card(sg.labels[static_cast<std::size_t>(v)] ^
                       sg.labels[static_cast<std::size_t>(r.witness[i + 1])]) == 1);
    }
    if (mode == HamiltonMode::cycle)
        CHECK(card(sg.labels[static_cast<std::size_t>(r.witness.front())] ^
                   sg.labels[static_cast<std::size_t>(r.witness.back())]) == 1);
}

}  // namespace

TEST_CASE("hamilton paths in domination TAR graphs of cycles") {
    SetGraph c5 = tar_graph_of(ParameterKind::domination, "cycle:5");
    auto yes = hamilton_search(c5, HamiltonMode::path);
    check_witness(c5, yes, HamiltonMode::path);

    auto no = hamilton_search(tar_graph_of(ParameterKind::domination, "cycle:4"), HamiltonMode::path);
    CHECK(no.verdict == HamiltonResult::Verdict::no);
}

TEST_CASE("hamilton cycles where hypercubes appear") {
    SetGraph q3 = tar_graph_of(ParameterKind::vertex_cover, "empty:3");
    auto r = hamilton_search(q3, HamiltonMode::cycle);
    check_witness(q3, r, HamiltonMode::cycle);

    auto star3 = hamilton_search(tar_graph_of(ParameterKind::zero_forcing, "star:3"), HamiltonMode::cycle);
    CHECK(star3.verdict == HamiltonResult::Verdict::no);
}

TEST_CASE("degenerate orders") {
    SetGraph single{{VertexSet{1}}, {{}}};
    CHECK(hamilton_search(single, HamiltonMode::path).verdict == HamiltonResult::Verdict::yes);
    CHECK(hamilton_search(single, HamiltonMode::cycle).verdict == HamiltonResult::Verdict::no);
}

TEST_CASE("budget exhaustion reports unknown") {
    auto r = hamilton_search(tar_graph_of(ParameterKind::domination, "cycle:6"), HamiltonMode::path, 1);
    CHECK(r.verdict == HamiltonResult::Verdict::unknown);
    CHECK(r.nodes_explored >= 1);
}
