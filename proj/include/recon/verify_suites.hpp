#pragma once

// Exhaustive axiom and structure suites over the small-order universes;
// included at the end of verify.hpp.

namespace recon {
namespace detail {

inline VertexSet compress_mask(VertexSet s, VertexSet within) {
    VertexSet out = 0;
    int i = 0;
    for (int v : vertices_of(within)) {
        if (contains(s, v)) out |= vbit(i);
        ++i;
    }
    return out;
}

// normalizes component labels to first-occurrence order so two partitions
// compare positionally
inline std::vector<int> normalize_partition(const std::vector<int>& labels) {
    std::vector<int> out(labels.size(), -1);
    std::map<int, int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out[i] = seen.emplace(labels[i], static_cast<int>(seen.size())).first->second;
    return out;
}

inline void claims_axiom_suites(std::vector<Claim>& out) {
    out.push_back({"axioms-closure", 6, "feasible sets are superset-closed (minimizing) or subset-closed (maximizing)",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds)
                           for (const Graph& g : suite_for(kind)) {
                               FeasibilityMap feas(kind, g);
                               int n = g.order();
                               for (VertexSet s = 0; s <= full_set(n) && all; ++s) {
                                   if (!feas[s]) continue;
                                   if (is_x_kind(kind)) {
                                       for (int v : vertices_of(full_set(n) & ~s))
                                           if (!feas[s | vbit(v)]) {
                                               all = false;
                                               bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                           }
                                   } else {
                                       for (int v : vertices_of(s))
                                           if (!feas[s & ~vbit(v)]) {
                                               all = false;
                                               bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                           }
                                   }
                               }
                           }
                       c.holds("closed", all, bad);
                   }});
    out.push_back({"axioms-n1set", 6, "robust kinds: every (n-1)-set (minimizing) or singleton (maximizing) is feasible",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds) {
                           if (!kind_info(kind).robust) continue;
                           for (const Graph& g : suite_for(kind)) {
                               int n = g.order();
                               if (is_x_kind(kind)) {
                                   if (n < 2 && kind_info(kind).value_at_k1 != 0) continue;
                                   for (int v = 0; v < n; ++v)
                                       if (!is_feasible(kind, g, full_set(n) & ~vbit(v))) {
                                           all = false;
                                           bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                       }
                               } else {
                                   for (int v = 0; v < n; ++v)
                                       if (!is_feasible(kind, g, vbit(v))) {
                                           all = false;
                                           bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                       }
                               }
                           }
                       }
                       c.holds("n1set", all, bad);
                   }});
    out.push_back({"axioms-component", 6, "robust kinds: feasibility on a disjoint union is componentwise",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds) {
                           if (!kind_info(kind).robust) continue;
                           for (const Graph& g : suite_for(kind)) {
                               auto comps = connected_components(g);
                               if (comps.size() < 2) continue;
                               std::vector<Graph> parts;
                               std::vector<FeasibilityMap> maps;
                               for (VertexSet comp : comps) {
                                   parts.push_back(induced_subgraph(g, comp));
                                   maps.emplace_back(kind, parts.back());
                               }
                               FeasibilityMap whole(kind, g);
                               for (VertexSet s = 0; s <= full_set(g.order()); ++s) {
                                   bool piecewise = true;
                                   for (std::size_t i = 0; i < comps.size(); ++i)
                                       if (!maps[i][compress_mask(s & comps[i], comps[i])]) piecewise = false;
                                   if (whole[s] != piecewise) {
                                       all = false;
                                       bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                   }
                               }
                           }
                       }
                       c.holds("componentwise", all, bad);
                   }});
    out.push_back({"axioms-k1", 6, "one-vertex behavior matches each kind's K1 value; skew and vc accept the empty set",
                   [](Check& c, std::string&) {
                       Graph k1(1);
                       for (ParameterKind kind : all_kinds) {
                           KindInfo info = kind_info(kind);
                           auto v = parameter_values(kind, k1);
                           c.eq(std::string(info.cli_name) + "_value", info.value_at_k1, v.value);
                           bool empty_ok = is_feasible(kind, k1, 0);
                           bool want = is_x_kind(kind) ? info.value_at_k1 == 0 : true;
                           c.eq_bool(std::string(info.cli_name) + "_empty", want, empty_ok);
                       }
                   }});
    out.push_back({"degree-laws", 6, "TAR degrees: max is n, extremal sets sit at the boundary, min encodes the extremal value",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds)
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               int n = g.order();
                               auto stats = degree_stats(tar);
                               bool ok = true;
                               if (is_x_kind(kind)) {
                                   for (VertexSet s : tar.extremal_sets())
                                       if (tar.degree(s) != n - card(s)) ok = false;
                                   if (stats.min_degree != n - tar.values().extremal) ok = false;
                                   bool exempt = kind_info(kind).value_at_k1 == 0;
                                   if (kind_info(kind).robust && (exempt || !g.has_isolated_vertex()))
                                       if (stats.max_degree != n) ok = false;
                               } else {
                                   for (VertexSet s : tar.extremal_sets())
                                       if (tar.degree(s) != card(s)) ok = false;
                                   if (stats.min_degree != tar.values().extremal) ok = false;
                                   if (kind_info(kind).robust && stats.max_degree != n) ok = false;
                               }
                               // max TAR degree is n exactly when every boundary set is feasible
                               bool every_boundary = true;
                               for (int v = 0; v < n; ++v) {
                                   VertexSet s = is_x_kind(kind) ? full_set(n) & ~vbit(v) : vbit(v);
                                   if (!tar.has_set(s)) every_boundary = false;
                               }
                               if ((stats.max_degree == n) != every_boundary) ok = false;
                               if (!ok) {
                                   all = false;
                                   bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                               }
                           }
                       c.holds("degree_laws", all, bad);
                   }});
    out.push_back({"hypercube-dim", 6, "maximum induced hypercube dimension equals n minus the parameter value",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds) {
                           if (!is_x_kind(kind)) continue;
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               int formula = hypercube_dimension(tar);
                               if (formula != g.order() - tar.values().value ||
                                   formula != hypercube_dimension_verified(tar)) {
                                   all = false;
                                   bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                               }
                           }
                       }
                       c.holds("dimension", all, bad);
                   }});
    out.push_back({"basic1-chains", 6, "threshold chains hold on every suite instance, both directions",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds)
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               auto prof = connectivity_profile(tar);
                               int n = g.order();
                               int value = tar.values().value, extremal = tar.values().extremal;
                               long n_extremal = static_cast<long>(tar.extremal_sets().size());
                               long n_optimal = 0;
                               for (VertexSet s : tar.extremal_sets())
                                   if (card(s) == value) ++n_optimal;
                               bool ok = true;
                               if (is_x_kind(kind)) {
                                   int ux0 = prof.first_threshold, x0 = prof.stable_threshold;
                                   ok &= value <= ux0 && ux0 <= x0 && x0 <= n;
                                   if (n_extremal == 1) ok &= value == ux0 && ux0 == x0;
                                   if (n_extremal > 1)
                                       ok &= extremal + 1 <= x0 && x0 <= std::min(extremal + value, n);
                                   if (n_optimal > 1) ok &= value + 1 <= ux0;
                                   if (value == 1 && n_extremal > 1) ok &= x0 == extremal + 1;
                               } else {
                                   int oy0 = prof.first_threshold, y0 = prof.stable_threshold;
                                   ok &= value >= oy0 && oy0 >= y0 && y0 >= 0;
                                   if (n_extremal == 1) ok &= value == oy0 && oy0 == y0;
                                   if (n_extremal > 1)
                                       ok &= extremal - 1 >= y0 && y0 >= std::max(extremal + value - n, 0);
                                   if (n_optimal > 1) ok &= value - 1 >= oy0;
                                   if (value == n - 1 && n_extremal > 1) ok &= y0 == extremal - 1;
                               }
                               if (!ok) {
                                   all = false;
                                   bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                               }
                           }
                       c.holds("chains", all, bad);
                   }});
    out.push_back({"cut-vertex-law", 6, "the only possible TAR cut-vertex is the full set (minimizing) or empty set (maximizing)",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds)
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               VertexSet allowed = is_x_kind(kind) ? g.vertices() : 0;
                               for (VertexSet s : cut_vertices(tar))
                                   if (s != allowed) {
                                       all = false;
                                       bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                   }
                           }
                       c.holds("cut_vertices", all, bad);
                   }});
    out.push_back({"nu-automorphism", 6, "xor by R is a TAR automorphism exactly when R is irrelevant",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds) {
                           if (!is_x_kind(kind)) continue;
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               VertexSet irrelevant = g.vertices();
                               for (VertexSet s : tar.extremal_sets()) irrelevant &= ~s;
                               for (VertexSet r = 0; r <= full_set(g.order()); ++r) {
                                   bool want = (r & ~irrelevant) == 0;
                                   if (nu_automorphism_check(tar, r) != want) {
                                       all = false;
                                       bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g);
                                   }
                               }
                           }
                       }
                       c.holds("nu_iff_irrelevant", all, bad);
                   }});
    out.push_back({"product-law", 6, "the TAR graph of a disjoint union is the box product of the TAR graphs",
                   [](Check& c, std::string&) {
                       std::vector<Graph> small;
                       for (int n = 1; n <= 3; ++n)
                           for (const Graph& g : generate_nonisomorphic(n, GraphFilter::all)) small.push_back(g);
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds) {
                           if (!kind_info(kind).robust) continue;
                           for (const Graph& a : small)
                               for (const Graph& b : small) {
                                   Graph u = disjoint_union(a, b);
                                   FeasibilityMap fu(kind, u), fa(kind, a), fb(kind, b);
                                   for (VertexSet s = 0; s <= full_set(u.order()); ++s) {
                                       bool split = fa[s & full_set(a.order())] && fb[s >> a.order()];
                                       if (fu[s] != split) {
                                           all = false;
                                           bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(u);
                                       }
                                   }
                               }
                       }
                       c.holds("box_product", all, bad);
                   }});
    out.push_back({"complement-duality", 6, "a set is independent exactly when its complement is a vertex cover, order <= 6",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (int n = 1; n <= 6; ++n)
                           for (const Graph& g : generate_nonisomorphic(n, GraphFilter::all)) {
                               FeasibilityMap ind(ParameterKind::independence, g);
                               FeasibilityMap vc(ParameterKind::vertex_cover, g);
                               for (VertexSet s = 0; s <= full_set(n); ++s)
                                   if (ind[s] != vc[g.vertices() & ~s]) {
                                       all = false;
                                       bad = graph_tag(g);
                                   }
                           }
                       c.holds("duality", all, bad);
                   }});
    out.push_back({"tj-tar-equivalence", 6, "token-jumping components match the adjacent TAR slice restricted to that level",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (ParameterKind kind : all_kinds)
                           for (const Graph& g : suite_for(kind)) {
                               TarGraph tar(kind, g);
                               int n = g.order();
                               for (int k = 0; k <= n; ++k) {
                                   SetGraph tj = build_tj(kind, g, k);
                                   if (tj.order() == 0) continue;
                                   int slice_k = is_x_kind(kind) ? std::min(k + 1, n) : std::max(k - 1, 0);
                                   SetGraph slice = k_slice(tar, slice_k);
                                   std::vector<int> slice_comp = graph_components(slice);
                                   std::vector<int> restricted;
                                   for (std::size_t i = 0; i < slice.labels.size(); ++i)
                                       if (card(slice.labels[i]) == k) restricted.push_back(slice_comp[i]);
                                   std::vector<int> tj_comp = graph_components(tj);
                                   if (normalize_partition(restricted) != normalize_partition(tj_comp)) {
                                       all = false;
                                       bad = std::string(kind_info(kind).cli_name) + ":" + graph_tag(g) + ":k" +
                                             std::to_string(k);
                                   }
                               }
                           }
                       c.holds("tj_tar", all, bad);
                   }});
    out.push_back({"cdom-not-n1set", 6, "connected domination fails the (n-1)-set axiom on stars",
                   [](Check& c, std::string&) {
                       for (int q = 2; q <= 4; ++q) {
                           Graph star = build_family("star:" + std::to_string(q));
                           VertexSet leaves = star.vertices() & ~vbit(0);
                           c.eq_bool("leaves_q" + std::to_string(q), false,
                                     is_feasible(ParameterKind::connected_domination, star, leaves));
                           VertexSet everywhere = star.vertices();
                           for (VertexSet s : extremal_feasible_sets(ParameterKind::connected_domination, star))
                               everywhere &= s;
                           c.eq_bool("center_forced_q" + std::to_string(q), true, contains(everywhere, 0));
                       }
                   }});
    out.push_back({"pd-consistency", 6, "a set power dominates exactly when its closed neighborhood forces",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (const Graph& g : suite_for(ParameterKind::power_domination))
                           for (VertexSet s = 0; s <= full_set(g.order()); ++s) {
                               bool direct = is_feasible(ParameterKind::power_domination, g, s);
                               bool via = forcing_closure(ForcingRule::standard, g, closed_neighborhood(g, s)) ==
                                          g.vertices();
                               if (direct != via) {
                                   all = false;
                                   bad = graph_tag(g);
                               }
                           }
                       c.holds("pd_consistency", all, bad);
                   }});
    out.push_back({"skew-twins", 6, "every skew forcing set misses at most one twin of the degree-two twin class",
                   [](Check& c, std::string&) {
                       for (int r = 2; r <= 3; ++r) {
                           Graph g = build_family("fh_twins:" + std::to_string(r));
                           VertexSet twins = vbit(0);
                           for (int v = 5; v < g.order(); ++v) twins |= vbit(v);
                           bool same_nbhd = true;
                           for (int v : vertices_of(twins))
                               if (g.neighbors(v) != (vbit(3) | vbit(4))) same_nbhd = false;
                           c.eq_bool("twins_r" + std::to_string(r), true, same_nbhd);
                           FeasibilityMap feas(ParameterKind::skew_forcing, g);
                           bool bound = true;
                           for (VertexSet s = 0; s <= full_set(g.order()); ++s)
                               if (feas[s] && card(s & twins) < card(twins) - 1) bound = false;
                           c.eq_bool("bound_r" + std::to_string(r), true, bound);
                       }
                   }});
    out.push_back({"leafstrip-skew-equiv", 6, "leaf stripping empties exactly when the empty set skew forces, order <= 7",
                   [](Check& c, std::string&) {
                       bool all = true;
                       std::string bad;
                       for (int n = 1; n <= 7; ++n)
                           for (const Graph& g : generate_nonisomorphic(n, GraphFilter::all)) {
                               bool empty = leaf_strip(g) == 0;
                               bool forces = forcing_closure(ForcingRule::skew, g, 0) == g.vertices();
                               if (empty != forces) {
                                   all = false;
                                   bad = graph_tag(g);
                               }
                           }
                       c.holds("equivalence", all, bad);
                   }});
}

}  // namespace detail
}  // namespace recon
