// Acceptance suite: nine numbered criteria, one pass/fail line each.
// Criterion 1 reproduces the uniqueness-census tables through order 8 (the
// order-8 universe is written as a graph6 file once and re-read through the
// stream path); the remaining criteria drive the recorded claim groups.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "recon/census.hpp"
#include "recon/verify.hpp"

using namespace recon;

namespace {

const char* universe8_path = "universe8.g6";

std::vector<Graph> order8_universe() {
    if (!std::filesystem::exists(universe8_path)) {
        std::ofstream out(universe8_path);
        for (const Graph& g : extend_universe(generate_nonisomorphic(7, GraphFilter::all)))
            out << write_graph6(g) << "\n";
    }
    std::ifstream in(universe8_path);
    return census_universe(in, 8, UniverseKind::no_isolated);
}

struct CriterionOutcome {
    bool pass = true;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

void run_claim_group(int criterion, CriterionOutcome& outcome) {
    for (const Claim& claim : all_claims()) {
        if (claim.criterion != criterion) continue;
        auto report = verify_claims({claim.id});
        const ClaimResult& r = report.claims.at(0);
        outcome.check(r.pass, r.id + ": expected [" + r.expected + "] computed [" + r.computed + "]");
        if (!r.note.empty()) std::cout << "  note (" << r.id << "): " << r.note << "\n";
    }
}

CriterionOutcome criterion_census_tables() {
    CriterionOutcome outcome;
    run_claim_group(1, outcome);

    const std::map<ParameterKind, std::vector<long>> table = {
        {ParameterKind::domination, {1, 2, 5, 14, 55, 348, 4275}},
        {ParameterKind::power_domination, {1, 0, 3, 4, 13, 25, 79}},
        {ParameterKind::zero_forcing, {1, 2, 4, 7, 34, 303, 5318}},
        {ParameterKind::psd_forcing, {1, 2, 3, 10, 48, 398, 6798}},
        {ParameterKind::skew_forcing, {1, 2, 4, 7, 27, 179, 3026}},
    };
    for (const auto& [kind, cells] : table) {
        auto row7 = run_census(kind, 7, 2);
        outcome.check(row7.unique_count == cells[5],
                      std::string(kind_info(kind).cli_name) + " n=7: expected " + std::to_string(cells[5]) +
                          ", computed " + std::to_string(row7.unique_count));
    }

    std::vector<Graph> universe8 = order8_universe();
    outcome.check(universe8.size() == 11302,
                  "order-8 universe: expected 11302, computed " + std::to_string(universe8.size()));
    for (const auto& [kind, cells] : table) {
        auto row8 = run_census(kind, 8, universe8, 2);
        outcome.check(row8.unique_count == cells[6],
                      std::string(kind_info(kind).cli_name) + " n=8: expected " + std::to_string(cells[6]) +
                          ", computed " + std::to_string(row8.unique_count));
    }
    return outcome;
}

struct CriterionSpec {
    int number;
    std::string label;
};

const std::vector<CriterionSpec> criteria = {
    {1, "census tables and universe row reproduce exactly for orders 2..8"},
    {2, "vertex cover and independence TAR graphs are unique through order 6"},
    {3, "family connectedness thresholds and parameter values are exact"},
    {4, "power domination on the subdivided K3 gadget meets its recorded bounds"},
    {5, "Hamilton path/cycle verdicts match on every listed instance"},
    {6, "axiom and structure suites hold exhaustively at small order"},
    {7, "isomorphism methods agree and the connected-domination counterexamples stand"},
    {8, "skew specifics: top levels, degree profiles, leaf stripping, zir endpoints"},
    {9, "even-hole-free threshold laws hold through order 6"},
};

bool run_criterion(int number) {
    CriterionOutcome outcome;
    if (number == 1) {
        outcome = criterion_census_tables();
    } else {
        run_claim_group(number, outcome);
    }
    const auto& spec = criteria.at(static_cast<std::size_t>(number - 1));
    for (const std::string& f : outcome.failures) std::cout << "  FAIL detail: " << f << "\n";
    std::cout << "criterion " << number << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << spec.label
              << "\n";
    return outcome.pass;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) selected = std::atoi(argv[++i]);
    }
    int failures = 0;
    if (selected >= 1 && selected <= 9) {
        if (!run_criterion(selected)) ++failures;
    } else {
        for (const CriterionSpec& spec : criteria)
            if (!run_criterion(spec.number)) ++failures;
    }
    return failures;
}
