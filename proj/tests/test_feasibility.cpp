#include <catch2/catch_amalgamated.hpp>

#include "recon/families.hpp"
#include "recon/feasibility.hpp"
#include "recon/generate.hpp"

using namespace recon;

// Paths and cycles are numbered 0..n-1 in path order, so the 1-based vertex
// labels used in the worked examples shift down by one.

namespace {

// test-local fort oracle: enumerate all subsets and apply the definition
std::vector<VertexSet> all_forts(const Graph& g) {
    std::vector<VertexSet> forts;
    for (VertexSet f = 1; f <= full_set(g.order()); ++f) {
        bool fort = true;
        for (int v : vertices_of(g.vertices() & ~f))
            if (card(g.neighbors(v) & f) == 1) fort = false;
        if (fort) forts.push_back(f);
    }
    return forts;
}

}  // namespace

TEST_CASE("closed neighborhoods") {
    Graph p4 = build_family("path:4");
    CHECK(closed_neighborhood(p4, vbit(1)) == (vbit(0) | vbit(1) | vbit(2)));
    CHECK(closed_neighborhood(p4, 0) == 0);
    Graph k23 = build_family("complete_bipartite:2,3");
    CHECK(closed_neighborhood(k23, vbit(0)) == (vbit(0) | vbit(2) | vbit(3) | vbit(4)));
}

TEST_CASE("forcing closures reach their fixpoints") {
    Graph p4 = build_family("path:4");
    CHECK(forcing_closure(ForcingRule::standard, p4, vbit(0)) == p4.vertices());
    CHECK(forcing_closure(ForcingRule::skew, p4, 0) == p4.vertices());

    Graph star = build_family("star:3");
    CHECK(forcing_closure(ForcingRule::psd, star, vbit(0)) == star.vertices());

    Graph c4 = build_family("cycle:4");
    CHECK(forcing_closure(ForcingRule::standard, c4, vbit(0)) == vbit(0));
}

TEST_CASE("feasibility predicates on worked examples") {
    Graph k23 = build_family("complete_bipartite:2,3");
    CHECK(is_feasible(ParameterKind::domination, k23, vbit(0) | vbit(2)));
    CHECK_FALSE(is_feasible(ParameterKind::domination, k23, vbit(0)));

    Graph fh = build_family("fullhouse");
    CHECK(is_feasible(ParameterKind::skew_forcing, fh, vbit(3)));
    CHECK(is_feasible(ParameterKind::skew_forcing, fh, vbit(0) | vbit(1) | vbit(2)));
    CHECK_FALSE(is_feasible(ParameterKind::skew_forcing, fh, vbit(0)));

    Graph p4 = build_family("path:4");
    CHECK(is_feasible(ParameterKind::vertex_cover, p4, vbit(1) | vbit(2)));
    CHECK_FALSE(is_feasible(ParameterKind::vertex_cover, p4, vbit(1)));

    Graph k3 = build_family("complete:3");
    CHECK_FALSE(is_feasible(ParameterKind::independence, k3, vbit(0) | vbit(1)));
    CHECK(is_feasible(ParameterKind::independence, k3, vbit(1)));

    Graph star = build_family("star:3");
    CHECK(is_feasible(ParameterKind::connected_domination, star, vbit(0)));
    CHECK_FALSE(is_feasible(ParameterKind::connected_domination, star, star.vertices() & ~vbit(0)));
    Graph two = disjoint_union(Graph(1), Graph(1));
    CHECK_THROWS_MATCHES(is_feasible(ParameterKind::connected_domination, two, 0), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::kind_unsupported_on_graph; }));
}

TEST_CASE("forts and private forts") {
    Graph star = build_family("star:3");
    CHECK(is_fort(star, star.vertices()));
    CHECK(is_fort(star, vbit(1) | vbit(2)));
    CHECK(is_fort(star, vbit(1) | vbit(3)));
    CHECK_FALSE(is_fort(star, vbit(1)));
    CHECK_FALSE(is_fort(star, 0));

    Graph p4 = build_family("path:4");
    CHECK_FALSE(is_fort(p4, vbit(0) | vbit(3)));

    // oracle agreement on small graphs
    for (const Graph& g : generate_nonisomorphic(5, GraphFilter::no_isolated)) {
        auto forts = all_forts(g);
        for (VertexSet f = 0; f <= full_set(g.order()); ++f) {
            bool expect = std::find(forts.begin(), forts.end(), f) != forts.end();
            CHECK(is_fort(g, f) == expect);
        }
    }

    Graph k4 = build_family("complete:4");
    CHECK(has_private_fort(k4, vbit(2), 2));
    CHECK_FALSE(has_private_fort(star, vbit(0) | vbit(1), 0));
    CHECK(has_private_fort(p4, vbit(0), 0));
    CHECK_THROWS_MATCHES(has_private_fort(p4, vbit(0), 1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::vertex_not_in_set; }));
}

TEST_CASE("extremal families on worked examples") {
    Graph k23 = build_family("complete_bipartite:2,3");
    auto dom_sets = extremal_feasible_sets(ParameterKind::domination, k23);
    REQUIRE(dom_sets.size() == 8);
    VertexSet a = vbit(0) | vbit(1), b = vbit(2) | vbit(3) | vbit(4);
    CHECK(std::count(dom_sets.begin(), dom_sets.end(), a) == 1);
    CHECK(std::count(dom_sets.begin(), dom_sets.end(), b) == 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j)
            CHECK(std::count(dom_sets.begin(), dom_sets.end(), vbit(i) | vbit(j)) == 1);

    auto skew_fh = extremal_feasible_sets(ParameterKind::skew_forcing, build_family("fullhouse"));
    CHECK(skew_fh == std::vector<VertexSet>{vbit(3), vbit(4), vbit(0) | vbit(1) | vbit(2)});

    auto ind_k23 = extremal_feasible_sets(ParameterKind::independence, k23);
    CHECK(ind_k23 == std::vector<VertexSet>{a, b});
}

TEST_CASE("parameter values on worked examples") {
    auto psd = parameter_values(ParameterKind::psd_forcing, build_family("complete_bipartite:2,4"));
    CHECK(psd.value == 2);
    CHECK(psd.extremal == 4);

    auto skew_k5 = parameter_values(ParameterKind::skew_forcing, build_family("complete:5"));
    CHECK(skew_k5.value == 3);
    CHECK(skew_k5.extremal == 3);

    CHECK(parameter_values(ParameterKind::vertex_cover, build_family("path:5")).value == 2);

    auto zir_k4 = parameter_values(ParameterKind::zf_irredundance, build_family("complete:4"));
    CHECK(zir_k4.value == 3);
    CHECK(zir_k4.extremal == 3);
}

TEST_CASE("irrelevant vertices") {
    CHECK(irrelevant_vertices(ParameterKind::skew_forcing, build_family("flower_of_triangles:3")) == vbit(0));
    Graph p4k1 = disjoint_union(build_family("path:4"), Graph(1));
    CHECK(irrelevant_vertices(ParameterKind::vertex_cover, p4k1) == vbit(4));
    CHECK(irrelevant_vertices(ParameterKind::domination, build_family("complete:4")) == 0);
}

TEST_CASE("leaf stripping") {
    CHECK(leaf_strip(build_family("path:4")) == 0);
    CHECK(leaf_strip(build_family("half_graph:3")) == 0);
    Graph c5 = build_family("cycle:5");
    CHECK(leaf_strip(c5) == c5.vertices());
}

TEST_CASE("even hole detection") {
    CHECK_FALSE(is_even_hole_free(build_family("cycle:4")));
    CHECK(is_even_hole_free(build_family("cycle:5")));
    CHECK_FALSE(is_even_hole_free(build_family("cycle:6")));
    for (const Graph& t : generate_nonisomorphic(6, GraphFilter::connected))
        if (t.edge_count() == t.order() - 1) CHECK(is_even_hole_free(t));
    Graph big(13);
    CHECK_THROWS_MATCHES(is_even_hole_free(big), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::order_too_large;
                         }));
}

TEST_CASE("one-vertex graph behavior splits by kind") {
    Graph k1(1);
    for (ParameterKind kind : all_kinds) {
        auto values = parameter_values(kind, k1);
        CHECK(values.value == kind_info(kind).value_at_k1);
    }
    CHECK(is_feasible(ParameterKind::skew_forcing, k1, 0));
    CHECK(is_feasible(ParameterKind::vertex_cover, k1, 0));
    CHECK_FALSE(is_feasible(ParameterKind::domination, k1, 0));
    CHECK_FALSE(is_feasible(ParameterKind::zero_forcing, k1, 0));
    // under the isolated-vertex exemption the literal skew closure still
    // cannot move, so the leaf-strip equivalence stays intact
    CHECK(forcing_closure(ForcingRule::skew, k1, 0) == 0);
    CHECK(leaf_strip(k1) == k1.vertices());
}
