#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>

#include "recon/families.hpp"
#include "recon/generate.hpp"
#include "recon/tar_iso.hpp"

using namespace recon;

TEST_CASE("domination TAR graphs of K33 and the 3-prism coincide") {
    Graph k33 = build_family("complete_bipartite:3,3");
    Graph prism = cartesian_product(build_family("complete:3"), build_family("complete:2"));

    auto setsys = tar_isomorphic(ParameterKind::domination, k33, prism, IsoMethod::setsystem);
    REQUIRE(setsys.isomorphic);
    REQUIRE(setsys.relabeling.has_value());

    // the returned vertex map must carry minimal dominating sets onto
    // minimal dominating sets
    auto fam_g = extremal_feasible_sets(ParameterKind::domination, k33);
    auto fam_h = extremal_feasible_sets(ParameterKind::domination, prism);
    std::vector<VertexSet> mapped;
    for (VertexSet s : fam_g) {
        VertexSet t = 0;
        for (int v : vertices_of(s)) t |= vbit((*setsys.relabeling)[static_cast<std::size_t>(v)]);
        mapped.push_back(t);
    }
    std::sort(mapped.begin(), mapped.end());
    std::sort(fam_h.begin(), fam_h.end());
    CHECK(mapped == fam_h);

    CHECK(tar_isomorphic(ParameterKind::domination, k33, prism, IsoMethod::direct).isomorphic);
}

TEST_CASE("zir TAR graphs survive adding a chord to C5") {
    Graph c5 = build_family("cycle:5");
    Graph chord = c5;
    chord.add_edge(0, 2);
    CHECK(tar_isomorphic(ParameterKind::zf_irredundance, c5, chord).isomorphic);
    CHECK(tar_isomorphic(ParameterKind::zf_irredundance, c5, chord, IsoMethod::direct).isomorphic);
}

TEST_CASE("vertex cover TAR graphs separate all small graphs") {
    auto graphs = generate_nonisomorphic(4, GraphFilter::no_isolated);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(tar_isomorphic(ParameterKind::vertex_cover, graphs[i], graphs[j]).isomorphic);
}

TEST_CASE("methods agree on an order-4 sample for every robust kind") {
    auto graphs = generate_nonisomorphic(4, GraphFilter::no_isolated);
    for (ParameterKind kind : all_kinds) {
        if (!kind_info(kind).robust) continue;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                bool a = tar_isomorphic(kind, graphs[i], graphs[j], IsoMethod::setsystem).isomorphic;
                bool b = tar_isomorphic(kind, graphs[i], graphs[j], IsoMethod::direct).isomorphic;
                CHECK(a == b);
            }
    }
}

TEST_CASE("the large-graph canonical labeler matches the word-sized one") {
    std::mt19937 rng(424242);
    std::vector<std::string> big, small;
    for (ParameterKind kind : all_kinds) {
        if (kind == ParameterKind::connected_domination) continue;
        for (const Graph& g : generate_nonisomorphic(4, GraphFilter::no_isolated)) {
            TarGraph tar(kind, g);
            SetGraph sg = to_set_graph(tar);
            big.push_back(set_graph_canonical_form(sg));
            small.push_back(canonical_form(tar_as_graph(tar)));

            // invariance under a random relabeling of the TAR vertices
            std::vector<int> perm(sg.labels.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            SetGraph shuffled;
            shuffled.labels.assign(sg.labels.size(), 0);
            shuffled.adj.assign(sg.labels.size(), {});
            for (std::size_t v = 0; v < sg.labels.size(); ++v) {
                shuffled.labels[static_cast<std::size_t>(perm[v])] = sg.labels[v];
                for (int w : sg.adj[v])
                    shuffled.adj[static_cast<std::size_t>(perm[v])].push_back(perm[static_cast<std::size_t>(w)]);
            }
            CHECK(set_graph_canonical_form(shuffled) == big.back());
        }
    }
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i + 1; j < big.size(); ++j)
            CHECK((big[i] == big[j]) == (small[i] == small[j]));
}

TEST_CASE("setsystem preconditions are enforced") {
    Graph a = build_family("star:3"), b = build_family("path:4");
    CHECK_THROWS_MATCHES(tar_isomorphic(ParameterKind::connected_domination, a, b, IsoMethod::setsystem), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::method_precondition_violated; }));
    // the automatic route falls back to the direct method
    CHECK_FALSE(tar_isomorphic(ParameterKind::connected_domination, a, b).isomorphic);

    Graph with_isolated = disjoint_union(build_family("path:3"), Graph(1));
    CHECK_THROWS_AS(
        tar_isomorphic(ParameterKind::domination, with_isolated, with_isolated, IsoMethod::setsystem), Error);
    // value-0-at-K1 kinds stay admissible with isolated vertices around
    CHECK(tar_isomorphic(ParameterKind::vertex_cover, with_isolated, with_isolated, IsoMethod::setsystem)
              .isomorphic);
}
