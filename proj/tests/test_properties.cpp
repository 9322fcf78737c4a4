#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "recon/canonical.hpp"
#include "recon/export.hpp"
#include "recon/families.hpp"
#include "recon/generate.hpp"
#include "recon/tar.hpp"

using namespace recon;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

VertexSet random_set(int n, std::mt19937& rng) {
    return std::uniform_int_distribution<VertexSet>(0, full_set(n))(rng);
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("closure operators are monotone idempotent fixpoints") {
    std::mt19937 rng(7421);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.4, rng);
        VertexSet s = random_set(n, rng);
        for (ForcingRule rule : {ForcingRule::standard, ForcingRule::psd, ForcingRule::skew}) {
            VertexSet closed = forcing_closure(rule, g, s);
            CHECK((closed & s) == s);
            CHECK(forcing_closure(rule, g, closed) == closed);
            VertexSet bigger = s | random_set(n, rng);
            CHECK((forcing_closure(rule, g, bigger) & closed) == closed);
        }
        VertexSet std_closed = forcing_closure(ForcingRule::standard, g, s);
        CHECK((forcing_closure(ForcingRule::psd, g, s) & std_closed) == std_closed);
        CHECK((forcing_closure(ForcingRule::skew, g, s) & std_closed) == std_closed);
    }
}

TEST_CASE("feasibility is closed under the direction of each kind") {
    std::mt19937 rng(90121);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.45, rng);
        for (ParameterKind kind : all_kinds) {
            if (kind == ParameterKind::connected_domination && !is_connected(g)) continue;
            VertexSet s = random_set(n, rng);
            if (!is_feasible(kind, g, s)) continue;
            VertexSet flip = vbit(static_cast<int>(rng() % static_cast<unsigned>(n)));
            VertexSet t = is_x_kind(kind) ? (s | flip) : (s & ~flip);
            CHECK(is_feasible(kind, g, t));
        }
    }
}

TEST_CASE("isomorphism checking is relabeling-invariant and consistent") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.5, rng);
        Graph h = relabel(g, random_permutation(n, rng));
        CHECK(is_isomorphic(g, h));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(write_graph6(parse_graph6(write_graph6(g))) == write_graph6(g));
    }
}

TEST_CASE("TAR graphs are bipartite by cardinality parity and connected") {
    std::mt19937 rng(3301);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.5, rng);
        for (ParameterKind kind : all_kinds) {
            if (kind == ParameterKind::connected_domination && !is_connected(g)) continue;
            SetGraph sg = to_set_graph(TarGraph(kind, g));
            for (int v = 0; v < sg.order(); ++v)
                for (int w : sg.adj[static_cast<std::size_t>(v)])
                    CHECK((card(sg.labels[static_cast<std::size_t>(v)]) -
                           card(sg.labels[static_cast<std::size_t>(w)])) % 2 != 0);
            for (int c : graph_components(sg)) CHECK(c == 0);
        }
    }
}

TEST_CASE("single-deletion minimality agrees with full-subset minimality") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : generate_nonisomorphic(n, GraphFilter::no_isolated))
            for (ParameterKind kind : all_kinds) {
                if (kind == ParameterKind::connected_domination && !is_connected(g)) continue;
                FeasibilityMap feas(kind, g);
                auto extremal = extremal_feasible_sets(kind, g);
                for (VertexSet s = 0; s <= full_set(n); ++s) {
                    if (!feas[s]) continue;
                    bool extreme = true;
                    for (VertexSet t = 0; t <= full_set(n); ++t) {
                        if (t == s || !feas[t]) continue;
                        if (is_x_kind(kind) ? (t & s) == t : (s & t) == s) extreme = false;
                    }
                    bool listed = std::find(extremal.begin(), extremal.end(), s) != extremal.end();
                    CHECK(listed == extreme);
                }
            }
}

TEST_CASE("edge lists round trip") {
    std::mt19937 rng(40404);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng);
        std::stringstream text;
        text << "n " << g.order() << "\n" << to_edge_list(g);
        CHECK(parse_edge_list(text) == g);
    }
}

TEST_CASE("set serialization round trips") {
    std::mt19937 rng(11011);
    for (int trial = 0; trial < 200; ++trial) {
        VertexSet s = random_set(2 + static_cast<int>(rng() % 20), rng);
        CHECK(parse_set_string(set_to_string(s)) == s);
        CHECK(set_from_indices(set_to_indices(s)) == s);
    }
    CHECK(set_to_string(0) == "{}");
    CHECK(parse_set_string("{}") == 0);
}
