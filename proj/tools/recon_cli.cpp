// Command-line frontend: every engine capability behind one binary with
// text, json, csv, and dot output. Results go to stdout, diagnostics to
// stderr; exit 0 on success, 1 when verify finds failing claims, 2 on
// usage or input errors.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "recon/census.hpp"
#include "recon/export.hpp"
#include "recon/families.hpp"
#include "recon/hamilton.hpp"
#include "recon/tar_iso.hpp"
#include "recon/verify.hpp"

using nlohmann::json;
using namespace recon;

namespace {

struct GraphSource {
    std::string family;
    std::string graph6;
    std::string file;

    void add_options(CLI::App* cmd, const std::string& suffix = "") {
        auto group = cmd->add_option_group("graph" + suffix);
        group->add_option("--family" + suffix, family, "family spec, e.g. cycle:5 or k2q:4,(complete:3)");
        group->add_option("--graph6" + suffix, graph6, "graph6 literal");
        group->add_option("--file" + suffix, file, "file with a graph6 record (or - for stdin)");
        group->require_option(1);
    }

    Graph load() const {
        if (!family.empty()) return build_family(family);
        if (!graph6.empty()) return parse_graph6(graph6);
        if (file == "-") {
            auto graphs = read_graph6_stream(std::cin);
            require(!graphs.empty(), Errc::bad_argument, "no graph6 record on stdin");
            return graphs.front();
        }
        std::ifstream in(file);
        require(in.good(), Errc::bad_argument, "cannot open " + file);
        auto graphs = read_graph6_stream(in);
        require(!graphs.empty(), Errc::bad_argument, "no graph6 record in " + file);
        return graphs.front();
    }
};

json set_to_json(VertexSet s) {
    json arr = json::array();
    for (int v : vertices_of(s)) arr.push_back(v);
    return arr;
}

json sets_to_json(const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (VertexSet s : sets) arr.push_back(set_to_json(s));
    return arr;
}

std::string ratio_string(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", r);
    return buf;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    require(out.good(), Errc::bad_argument, "cannot write " + output_path);
    out << text;
}

int default_threads() {
    if (const char* env = std::getenv("RECON_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

struct Options {
    std::string kind_name = "dom";
    std::string format = "text";
    std::string output;
    GraphSource source, source_b;
    int order = 0;
    int k = 0;
    int threads = default_threads();
    std::string input;
    std::string universe = "no-isolated";
    std::string classes_out;
    std::string mode = "path";
    std::uint64_t budget = 100'000'000;
    std::string method = "auto";
    bool relabel = false;
    std::string claims;
    bool list_claims = false;
};

std::vector<Graph> load_universe(const Options& opt) {
    UniverseKind uk = opt.universe == "all" ? UniverseKind::all : UniverseKind::no_isolated;
    if (opt.input.empty()) {
        require(opt.order <= 7, Errc::source_required,
                "order above 7 needs --input with a graph6 universe");
        return census_universe(opt.order, uk);
    }
    if (opt.input == "-") return census_universe(std::cin, opt.order, uk);
    std::ifstream in(opt.input);
    require(in.good(), Errc::bad_argument, "cannot open " + opt.input);
    return census_universe(in, opt.order, uk);
}

int run_graph(const Options& opt) {
    Graph g = opt.source.load();
    if (opt.format == "graph6") {
        emit(write_graph6(g) + "\n", opt.output);
    } else if (opt.format == "dot") {
        emit(to_dot(g), opt.output);
    } else if (opt.format == "edgelist") {
        emit("n " + std::to_string(g.order()) + "\n" + to_edge_list(g), opt.output);
    } else {
        std::ostringstream out;
        out << "order: " << g.order() << "\nedges: " << g.edge_count() << "\ndegrees:";
        for (int v = 0; v < g.order(); ++v) out << " " << g.degree(v);
        out << "\nconnected: " << (is_connected(g) ? "yes" : "no") << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_param(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    TarGraph tar(kind, g);
    const auto& v = tar.values();
    const char* extremal_word = is_x_kind(kind) ? "upper" : "lower";
    const char* sets_word = is_x_kind(kind) ? "minimal sets" : "maximal sets";
    if (opt.format == "json") {
        json out = {{"kind", kind_info(kind).cli_name},
                    {"order", g.order()},
                    {"value", v.value},
                    {"extremal", v.extremal},
                    {"direction", is_x_kind(kind) ? "min" : "max"},
                    {"extremal_sets", sets_to_json(tar.extremal_sets())}};
        emit(out.dump(2) + "\n", opt.output);
    } else if (opt.format == "csv") {
        std::ostringstream out;
        out << kind_info(kind).cli_name << "," << g.order() << "," << v.value << "," << v.extremal << ","
            << tar.extremal_sets().size() << "\n";
        emit(out.str(), opt.output);
    } else {
        std::ostringstream out;
        out << "kind: " << kind_info(kind).display_name << " (" << kind_info(kind).symbol << ")\n"
            << "graph: order " << g.order() << ", " << g.edge_count() << " edges\n"
            << "value: " << v.value << "\n"
            << extremal_word << ": " << v.extremal << "\n"
            << sets_word << " (" << tar.extremal_sets().size() << "):";
        for (VertexSet s : tar.extremal_sets()) out << " " << set_to_string(s);
        out << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_tar(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    TarGraph tar(kind, g);
    if (opt.format == "dot") {
        emit(to_dot(to_set_graph(tar)), opt.output);
    } else if (opt.format == "graph6") {
        // graph6 carries at most 32 vertices; larger TAR graphs fall back
        // to the edge-list form
        if (tar.order() > max_order) {
            std::cerr << "note: TAR graph has " << tar.order() << " vertices; emitting an edge list\n";
            emit(to_edge_list(to_set_graph(tar)), opt.output);
        } else {
            emit(write_graph6(tar_as_graph(tar)) + "\n", opt.output);
        }
    } else if (opt.format == "edgelist") {
        emit(to_edge_list(to_set_graph(tar)), opt.output);
    } else if (opt.format == "json") {
        json out = {{"kind", kind_info(kind).cli_name},
                    {"base_order", g.order()},
                    {"tar_order", tar.order()},
                    {"value", tar.values().value},
                    {"extremal", tar.values().extremal},
                    {"sets", sets_to_json(tar.sets())}};
        emit(out.dump(2) + "\n", opt.output);
    } else {
        auto stats = degree_stats(tar);
        std::ostringstream out;
        out << "kind: " << kind_info(kind).display_name << "\n"
            << "base order: " << g.order() << "\n"
            << "TAR vertices: " << tar.order() << "\n"
            << "value: " << tar.values().value << ", extremal: " << tar.values().extremal << "\n"
            << "TAR degrees: max " << stats.max_degree << ", min " << stats.min_degree << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_connect(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    TarGraph tar(kind, g);
    auto prof = connectivity_profile(tar);
    const char* stable_name = is_x_kind(kind) ? "x0" : "y0";
    const char* first_name = is_x_kind(kind) ? "lower_x0" : "upper_y0";
    if (opt.format == "json") {
        json flags = json::array();
        for (int k = 0; k <= prof.n; ++k) flags.push_back(static_cast<bool>(prof.connected[static_cast<std::size_t>(k)]));
        json out = {{"kind", kind_info(kind).cli_name},
                    {"order", prof.n},
                    {"connected", flags},
                    {stable_name, prof.stable_threshold},
                    {first_name, prof.first_threshold}};
        emit(out.dump(2) + "\n", opt.output);
    } else if (opt.format == "csv") {
        std::ostringstream out;
        out << kind_info(kind).cli_name << "," << prof.n << "," << prof.first_threshold << ","
            << prof.stable_threshold << "\n";
        emit(out.str(), opt.output);
    } else {
        std::ostringstream out;
        out << "kind: " << kind_info(kind).display_name << "\n";
        out << "slice connected:";
        for (int k = 0; k <= prof.n; ++k)
            out << " " << k << ":" << (prof.connected[static_cast<std::size_t>(k)] ? "yes" : "no");
        out << "\n" << first_name << ": " << prof.first_threshold << "\n"
            << stable_name << ": " << prof.stable_threshold << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_tj(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    SetGraph tj = build_tj(kind, g, opt.k);
    if (opt.format == "dot") {
        emit(to_dot(tj, "TJ"), opt.output);
    } else if (opt.format == "edgelist") {
        emit(to_edge_list(tj), opt.output);
    } else if (opt.format == "json") {
        json out = {{"kind", kind_info(kind).cli_name},
                    {"k", opt.k},
                    {"order", tj.order()},
                    {"sets", sets_to_json(tj.labels)}};
        emit(out.dump(2) + "\n", opt.output);
    } else {
        auto comp = graph_components(tj);
        int ncomp = 0;
        for (int c : comp) ncomp = std::max(ncomp, c + 1);
        std::ostringstream out;
        out << "token-jumping graph at k=" << opt.k << ": " << tj.order() << " vertices, "
            << ncomp << " component(s)\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_hamilton(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    TarGraph tar(kind, g);
    SetGraph sg = to_set_graph(tar);
    HamiltonMode mode = opt.mode == "cycle" ? HamiltonMode::cycle : HamiltonMode::path;
    HamiltonResult r = hamilton_search(sg, mode, opt.budget);
    std::string verdict = r.verdict == HamiltonResult::Verdict::yes      ? "yes"
                          : r.verdict == HamiltonResult::Verdict::no     ? "no"
                                                                         : "unknown";
    if (opt.format == "json") {
        json witness = json::array();
        for (int i : r.witness) witness.push_back(set_to_json(sg.labels[static_cast<std::size_t>(i)]));
        json out = {{"kind", kind_info(kind).cli_name},
                    {"mode", opt.mode},
                    {"verdict", verdict},
                    {"nodes_explored", r.nodes_explored},
                    {"witness", witness}};
        emit(out.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        out << "hamilton " << opt.mode << ": " << verdict << " (" << r.nodes_explored << " nodes)\n";
        if (r.verdict == HamiltonResult::Verdict::yes) {
            out << "witness:";
            for (int i : r.witness) out << " " << set_to_string(sg.labels[static_cast<std::size_t>(i)]);
            out << "\n";
        }
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_iso(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    Graph g = opt.source.load();
    Graph h = opt.source_b.load();
    IsoMethod method = opt.method == "setsystem" ? IsoMethod::setsystem
                       : opt.method == "direct"  ? IsoMethod::direct
                                                 : IsoMethod::automatic;
    TarIsoResult r = tar_isomorphic(kind, g, h, method);
    if (opt.format == "json") {
        json out = {{"kind", kind_info(kind).cli_name}, {"isomorphic", r.isomorphic}};
        if (opt.relabel && r.relabeling) out["relabeling"] = *r.relabeling;
        emit(out.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        out << (r.isomorphic ? "true" : "false") << "\n";
        if (opt.relabel && r.relabeling) {
            out << "relabeling:";
            for (std::size_t v = 0; v < r.relabeling->size(); ++v)
                out << " " << v << "->" << (*r.relabeling)[v];
            out << "\n";
        }
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_census_cmd(const Options& opt) {
    ParameterKind kind = kind_from_name(opt.kind_name);
    std::vector<Graph> universe = load_universe(opt);
    UniquenessResult result = uniqueness_classes(kind, opt.order, universe, opt.threads);
    const CensusRow& row = result.row;
    if (!opt.classes_out.empty()) {
        json classes = json::array();
        for (const auto& cls : result.classes) {
            json members = json::array();
            for (int i : cls) members.push_back(write_graph6(universe[static_cast<std::size_t>(i)]));
            classes.push_back(members);
        }
        json out = {{"kind", kind_info(kind).cli_name},
                    {"order", row.order},
                    {"universe", row.universe_size},
                    {"unique", row.unique_count},
                    {"classes", classes}};
        std::ofstream cls(opt.classes_out);
        require(cls.good(), Errc::bad_argument, "cannot write " + opt.classes_out);
        cls << out.dump(2) << "\n";
    }
    if (opt.format == "json") {
        json out = {{"kind", kind_info(kind).cli_name},
                    {"order", row.order},
                    {"universe", row.universe_size},
                    {"unique", row.unique_count},
                    {"ratio", row.ratio()}};
        emit(out.dump(2) + "\n", opt.output);
    } else if (opt.format == "csv") {
        std::ostringstream out;
        out << kind_info(kind).cli_name << "," << row.order << "," << row.universe_size << ","
            << row.unique_count << "," << ratio_string(row.ratio()) << "\n";
        emit(out.str(), opt.output);
    } else {
        std::ostringstream out;
        out << "kind: " << kind_info(kind).display_name << "\n"
            << "order: " << row.order << "\n"
            << "universe: " << row.universe_size << "\n"
            << "unique: " << row.unique_count << "\n"
            << "ratio: " << ratio_string(row.ratio()) << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int run_verify(const Options& opt) {
    if (opt.list_claims) {
        std::ostringstream out;
        for (const std::string& id : claim_ids()) out << id << "\n";
        emit(out.str(), opt.output);
        return 0;
    }
    std::vector<std::string> ids;
    if (!opt.claims.empty() && opt.claims != "all") {
        std::vector<std::string> known = claim_ids();
        std::stringstream ss(opt.claims);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            require(std::find(known.begin(), known.end(), id) != known.end(), Errc::bad_argument,
                    "unknown claim id: " + id);
            ids.push_back(id);
        }
    }
    VerificationReport report = verify_claims(ids);
    if (opt.format == "json") {
        json rows = json::array();
        for (const ClaimResult& r : report.claims) {
            json row = {{"id", r.id},       {"criterion", r.criterion}, {"statement", r.statement},
                        {"expected", r.expected}, {"computed", r.computed},   {"pass", r.pass}};
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(row);
        }
        json out = {{"claims", rows}, {"passed", report.passed()}, {"failed", report.failed()}};
        emit(out.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        for (const ClaimResult& r : report.claims) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.statement << "\n";
            if (!r.pass) out << "  expected: " << r.expected << "\n  computed: " << r.computed << "\n";
            if (!r.note.empty()) out << "  note: " << r.note << "\n";
        }
        out << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
        emit(out.str(), opt.output);
    }
    return report.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TAR reconfiguration engine for vertex-set graph parameters"};
    app.require_subcommand(1);
    Options opt;

    const std::string kind_help = "parameter kind: dom pd zf psd skew vc cdom ind ir zir";
    auto add_kind = [&](CLI::App* cmd) { cmd->add_option("--kind", opt.kind_name, kind_help)->required(); };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", opt.format, "output format: " + choices);
        cmd->add_option("--output", opt.output, "write results to a file instead of stdout");
    };

    CLI::App* graph = app.add_subcommand("graph", "build a base graph and export or summarize it");
    opt.source.add_options(graph);
    add_format(graph, "text graph6 dot edgelist");

    CLI::App* param = app.add_subcommand("param", "parameter value, extremal value, extremal sets");
    add_kind(param);
    opt.source.add_options(param);
    add_format(param, "text json csv");

    CLI::App* tar = app.add_subcommand("tar", "build the TAR graph and export or summarize it");
    add_kind(tar);
    opt.source.add_options(tar);
    add_format(tar, "text dot graph6 edgelist json");

    CLI::App* connect = app.add_subcommand("connect", "slice connectivity profile and thresholds");
    add_kind(connect);
    opt.source.add_options(connect);
    add_format(connect, "text json csv");

    CLI::App* tj = app.add_subcommand("tj", "token-jumping graph at a fixed cardinality");
    add_kind(tj);
    opt.source.add_options(tj);
    tj->add_option("--k", opt.k, "set cardinality")->required();
    add_format(tj, "text dot edgelist json");

    CLI::App* hamilton = app.add_subcommand("hamilton", "Hamilton path/cycle search on the TAR graph");
    add_kind(hamilton);
    opt.source.add_options(hamilton);
    hamilton->add_option("--mode", opt.mode, "path or cycle");
    hamilton->add_option("--budget", opt.budget, "search node budget");
    add_format(hamilton, "text json");

    CLI::App* iso = app.add_subcommand("iso", "TAR isomorphism of two base graphs");
    add_kind(iso);
    opt.source.add_options(iso);
    opt.source_b.add_options(iso, "-b");
    iso->add_option("--method", opt.method, "auto, setsystem, or direct");
    iso->add_flag("--relabel", opt.relabel, "print the base-vertex relabeling when found");
    add_format(iso, "text json");

    CLI::App* census = app.add_subcommand("census", "TAR uniqueness census over an order universe");
    add_kind(census);
    census->add_option("--order", opt.order, "graph order")->required();
    census->add_option("--input", opt.input, "graph6 universe file (or - for stdin); required above order 7");
    census->add_option("--threads", opt.threads, "worker threads (default from RECON_THREADS)");
    census->add_option("--universe", opt.universe, "no-isolated (default) or all");
    census->add_option("--classes", opt.classes_out, "write the full class partition as JSON");
    add_format(census, "text csv json");

    CLI::App* verify = app.add_subcommand("verify", "recompute the recorded structural claims");
    verify->add_option("--claims", opt.claims, "comma-separated claim ids (default all)");
    verify->add_flag("--list", opt.list_claims, "list claim ids and exit");
    add_format(verify, "text json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (graph->parsed()) return run_graph(opt);
        if (param->parsed()) return run_param(opt);
        if (tar->parsed()) return run_tar(opt);
        if (connect->parsed()) return run_connect(opt);
        if (tj->parsed()) return run_tj(opt);
        if (hamilton->parsed()) return run_hamilton(opt);
        if (iso->parsed()) return run_iso(opt);
        if (census->parsed()) return run_census_cmd(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
