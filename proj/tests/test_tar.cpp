#include <catch2/catch_amalgamated.hpp>

#include "recon/canonical.hpp"
#include "recon/families.hpp"
#include "recon/generate.hpp"
#include "recon/tar.hpp"

using namespace recon;

namespace {

Graph hypercube(int d) {
    Graph q(1);
    for (int i = 0; i < d; ++i) q = cartesian_product(q, build_family("complete:2"));
    return q;
}

// removal oracle for articulation points
std::vector<VertexSet> cut_vertices_naive(const TarGraph& tar) {
    SetGraph sg = to_set_graph(tar);
    std::vector<VertexSet> cuts;
    auto count_components = [&](int skip) {
        std::vector<int> comp(sg.labels.size(), -1);
        int n = 0;
        for (std::size_t s = 0; s < sg.labels.size(); ++s) {
            if (comp[s] >= 0 || static_cast<int>(s) == skip) continue;
            comp[s] = n;
            std::vector<int> stack = {static_cast<int>(s)};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : sg.adj[static_cast<std::size_t>(v)])
                    if (w != skip && comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = n;
                        stack.push_back(w);
                    }
            }
            ++n;
        }
        return n;
    };
    int base = count_components(-1);
    for (int v = 0; v < sg.order(); ++v)
        if (count_components(v) > base) cuts.push_back(sg.labels[static_cast<std::size_t>(v)]);
    return cuts;
}

}  // namespace

TEST_CASE("TAR graphs of the worked base graphs") {
    TarGraph zf_k4(ParameterKind::zero_forcing, build_family("complete:4"));
    CHECK(zf_k4.order() == 5);
    CHECK(is_isomorphic(tar_as_graph(zf_k4), build_family("star:4")));

    TarGraph skew_p4(ParameterKind::skew_forcing, build_family("path:4"));
    CHECK(skew_p4.order() == 16);
    CHECK(is_isomorphic(tar_as_graph(skew_p4), hypercube(4)));

    TarGraph cdom_star(ParameterKind::connected_domination, build_family("star:3"));
    CHECK(cdom_star.order() == 8);
    CHECK(is_isomorphic(tar_as_graph(cdom_star), hypercube(3)));
}

TEST_CASE("slices and their connectivity") {
    TarGraph dom_k4(ParameterKind::domination, build_family("complete:4"));
    SetGraph k1_slice = k_slice(dom_k4, 1);
    CHECK(k1_slice.order() == 4);
    for (const auto& nbrs : k1_slice.adj) CHECK(nbrs.empty());

    SetGraph k2_slice = k_slice(dom_k4, 2);
    auto comp = graph_components(k2_slice);
    for (int c : comp) CHECK(c == 0);

    SetGraph whole = k_slice(dom_k4, 4);
    CHECK(whole.order() == dom_k4.order());
}

TEST_CASE("connectivity profiles on worked examples") {
    auto zf_p5 = connectivity_profile(TarGraph(ParameterKind::zero_forcing, build_family("path:5")));
    CHECK(zf_p5.first_threshold == 3);
    CHECK(zf_p5.stable_threshold == 3);

    auto skew_h2 = connectivity_profile(TarGraph(ParameterKind::skew_forcing, build_family("h_match:2")));
    CHECK(skew_h2.stable_threshold == 4);

    auto dom_k45 = connectivity_profile(TarGraph(ParameterKind::domination, build_family("complete_bipartite:4,5")));
    CHECK(dom_k45.first_threshold == 3);
    CHECK(dom_k45.stable_threshold == 6);

    TarGraph skew_fh2(ParameterKind::skew_forcing, build_family("fh_twins:2"));
    auto prof = connectivity_profile(skew_fh2);
    CHECK(skew_fh2.values().value == 2);
    CHECK(skew_fh2.values().extremal == 4);
    CHECK(prof.first_threshold == 3);
    CHECK(prof.stable_threshold == 5);

    auto ind_k23 = connectivity_profile(TarGraph(ParameterKind::independence, build_family("complete_bipartite:2,3")));
    CHECK(ind_k23.stable_threshold == 0);
    CHECK(ind_k23.first_threshold == 3);
}

TEST_CASE("token jumping graphs") {
    SetGraph tj = build_tj(ParameterKind::domination, build_family("complete:4"), 1);
    CHECK(tj.order() == 4);
    for (const auto& nbrs : tj.adj) CHECK(nbrs.size() == 3);
}

TEST_CASE("degree statistics follow the boundary laws") {
    TarGraph tar(ParameterKind::domination, build_family("complete_bipartite:2,3"));
    auto stats = degree_stats(tar);
    CHECK(stats.max_degree == 5);
    CHECK(stats.min_degree == 5 - tar.values().extremal);
    for (VertexSet s : tar.extremal_sets()) CHECK(tar.degree(s) == 5 - card(s));
}

TEST_CASE("hypercube dimension") {
    CHECK(hypercube_dimension(TarGraph(ParameterKind::zero_forcing, build_family("complete:4"))) == 1);
    CHECK(hypercube_dimension(TarGraph(ParameterKind::skew_forcing, build_family("path:4"))) == 4);
    for (const char* spec : {"path:5", "star:4"})
        CHECK(hypercube_dimension(TarGraph(ParameterKind::psd_forcing, build_family(spec))) == 4);
    TarGraph zf_p5(ParameterKind::zero_forcing, build_family("path:5"));
    CHECK(hypercube_dimension_verified(zf_p5) == hypercube_dimension(zf_p5));
    CHECK_THROWS_MATCHES(hypercube_dimension(TarGraph(ParameterKind::independence, build_family("path:3"))), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::wrong_direction; }));
}

TEST_CASE("cut vertices of TAR graphs") {
    Graph k23 = build_family("complete_bipartite:2,3");
    TarGraph vc_tar(ParameterKind::vertex_cover, k23);
    CHECK(cut_vertices(vc_tar) == std::vector<VertexSet>{k23.vertices()});

    TarGraph ind_tar(ParameterKind::independence, k23);
    CHECK(cut_vertices(ind_tar) == std::vector<VertexSet>{0});

    TarGraph zf_p3(ParameterKind::zero_forcing, build_family("path:3"));
    CHECK(cut_vertices(zf_p3).empty());

    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : generate_nonisomorphic(n, GraphFilter::all))
            for (ParameterKind kind : all_kinds) {
                if (kind == ParameterKind::connected_domination && !is_connected(g)) continue;
                TarGraph tar(kind, g);
                CHECK(cut_vertices(tar) == cut_vertices_naive(tar));
            }
}

TEST_CASE("xor automorphism criterion") {
    TarGraph skew_f3(ParameterKind::skew_forcing, build_family("flower_of_triangles:3"));
    CHECK(nu_automorphism_check(skew_f3, vbit(0)));
    CHECK(nu_automorphism_check(skew_f3, 0));
    TarGraph dom_k4(ParameterKind::domination, build_family("complete:4"));
    CHECK_FALSE(nu_automorphism_check(dom_k4, vbit(0)));
    CHECK_THROWS_MATCHES(
        nu_automorphism_check(TarGraph(ParameterKind::independence, build_family("path:3")), 0), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::wrong_direction; }));
}

TEST_CASE("oversized TAR graphs refuse plain-graph conversion") {
    TarGraph psd_tree(ParameterKind::psd_forcing, build_family("star:5"));
    CHECK(psd_tree.order() == 63);
    CHECK_THROWS_MATCHES(tar_as_graph(psd_tree), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::order_too_large;
                         }));
}
