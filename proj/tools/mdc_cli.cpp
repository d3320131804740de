// Command-line front end: solve/verify majority dominator colorings, print
// family closed forms, and run the theorem check suites.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdc/formulas.hpp"
#include "mdc/harness.hpp"
#include "mdc/io.hpp"
#include "mdc/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct GraphSource {
    std::string input_path;
    std::string format = "edgelist";
    std::string family;
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
    auto* input = cmd->add_option("--input", src.input_path, "graph file to read");
    cmd->add_option("--format", src.format, "input format: dimacs or edgelist")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    auto* family = cmd->add_option("--family", src.family, "family spec such as path:13");
    input->excludes(family);
    family->excludes(input);
}

mdc::ParsedGraph load_graph(const GraphSource& src) {
    if (!src.family.empty()) return {mdc::family_graph(mdc::parse_family_spec(src.family)), {}};
    if (src.input_path.empty())
        throw std::invalid_argument("exactly one graph source (--input or --family) is required");
    auto format = src.format == "dimacs" ? mdc::GraphFormat::dimacs : mdc::GraphFormat::edgelist;
    return mdc::parse_graph_file(src.input_path, format);
}

std::optional<std::uint64_t> resolve_budget(std::uint64_t cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("MDC_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::nullopt;
}

std::string classes_text(const mdc::Coloring& c) {
    std::ostringstream os;
    for (int i = 1; i <= c.num_colors; ++i) {
        os << (i == 1 ? "" : " ") << i << ":{";
        bool first = true;
        for (int v = 0; v < c.order(); ++v)
            if (c.color(v) == i) {
                os << (first ? "" : ",") << v;
                first = false;
            }
        os << "}";
    }
    return os.str();
}

int run_solve(const GraphSource& src, const std::string& output, std::uint64_t budget_flag) {
    auto parsed = load_graph(src);
    const mdc::Graph& g = parsed.graph;
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    auto budget = resolve_budget(budget_flag);

    auto solve = mdc::mdc_number(g, budget);
    bool solved = solve.status == mdc::SearchStatus::solved;

    auto chi = mdc::chromatic_number(g, budget);
    auto chi_d = mdc::dominator_chromatic_number(g, budget);
    int gamma = mdc::domination_number(g).value;
    int alpha = mdc::independence_number(g).value;
    int nu = mdc::matching_number(g).value;
    auto or_null = [](const mdc::ColoringResult& r) {
        return r.status == mdc::SearchStatus::solved ? json(r.value) : json();
    };

    if (output == "json") {
        json out{{"n", g.order()},
                 {"m", g.edge_count()},
                 {"chi_md", solved ? json(solve.value) : json()},
                 {"coloring", json::array()},
                 {"bounds",
                  {{"chi", or_null(chi)},
                   {"chi_d", or_null(chi_d)},
                   {"gamma", gamma},
                   {"alpha", alpha},
                   {"matching", nu}}},
                 {"stats", {{"nodes", solve.nodes}, {"status", solved ? "solved" : "budget_exhausted"}}}};
        if (solve.witness)
            for (int c : solve.witness->assignment) out["coloring"].push_back(c);
        std::cout << out.dump(2) << "\n";
    } else {
        auto or_undecided = [](const mdc::ColoringResult& r) {
            return r.status == mdc::SearchStatus::solved ? std::to_string(r.value)
                                                         : std::string("undecided");
        };
        std::cout << "n = " << g.order() << ", m = " << g.edge_count() << "\n";
        if (solved) {
            std::cout << "chi_md = " << solve.value << "\n";
            std::cout << "classes: " << classes_text(*solve.witness) << "\n";
        } else {
            std::cout << "chi_md undecided: node budget exhausted after " << solve.nodes << " nodes\n";
        }
        std::cout << "bounds: chi = " << or_undecided(chi) << ", chi_d = " << or_undecided(chi_d)
                  << ", gamma = " << gamma << ", alpha = " << alpha << ", matching = " << nu << "\n";
        std::cout << "nodes = " << solve.nodes << "\n";
    }
    return solved ? kExitOk : kExitBudget;
}

int run_verify(const GraphSource& src, const std::string& coloring_path, const std::string& output) {
    auto parsed = load_graph(src);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    mdc::Coloring coloring = mdc::parse_coloring_file(coloring_path, parsed.graph.order());
    auto violations = mdc::verify_mdc(parsed.graph, coloring);

    if (output == "json") {
        json out{{"n", parsed.graph.order()},
                 {"valid", violations.empty()},
                 {"violations", json::array()}};
        for (const auto& v : violations) out["violations"].push_back(v.to_string());
        std::cout << out.dump(2) << "\n";
    } else if (violations.empty()) {
        std::cout << "ok: majority dominator coloring with " << coloring.num_colors << " colors\n";
    } else {
        for (const auto& v : violations) std::cout << "violation: " << v.to_string() << "\n";
    }
    return violations.empty() ? kExitOk : kExitViolation;
}

int run_family(const std::string& spec_text, const std::string& output) {
    auto spec = mdc::parse_family_spec(spec_text);
    auto formula = mdc::chi_md_closed_form(spec);
    if (output == "json") {
        json out{{"family", spec.to_string()},
                 {"n", spec.order()},
                 {"chi_md", formula.value},
                 {"coloring", formula.witness.assignment},
                 {"provenance", formula.provenance}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << spec.to_string() << ": chi_md = " << formula.value << " (" << formula.provenance
                  << ")\n";
        std::cout << "witness: ";
        for (std::size_t i = 0; i < formula.witness.assignment.size(); ++i)
            std::cout << (i ? "," : "") << formula.witness.assignment[i];
        std::cout << "\n";
    }
    return kExitOk;
}

json report_to_json(const mdc::CheckReport& rep) {
    json out{{"theorem", rep.theorem_id},
             {"population", rep.population},
             {"tested", rep.tested},
             {"failures", json::array()},
             {"skipped", rep.skipped},
             {"equality_hits", rep.equality_hits}};
    for (const auto& f : rep.failures)
        out["failures"].push_back({{"graph", f.graph}, {"relation", f.relation}, {"observed", f.observed}});
    return out;
}

int run_check(const std::vector<std::string>& suites, int max_n, const std::string& random_spec,
              std::uint64_t seed, std::uint64_t budget_flag, const std::string& output) {
    auto budget = resolve_budget(budget_flag);
    mdc::GraphPopulation pop = mdc::GraphPopulation::Exhaustive(max_n);
    if (!random_spec.empty()) {
        int n = 0, count = 0;
        double p = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(random_spec);
        if (!(is >> n >> c1 >> p >> c2 >> count) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("--random expects n,p,count");
        pop = mdc::GraphPopulation::Random(n, p, seed, count);
    }

    std::vector<std::string> wanted = suites;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all"))
        wanted = {"bound-chain", "alpha-bound", "matching-bound", "small-values",
                  "large-values", "disconnected", "bipartite-corona"};

    std::vector<mdc::CheckReport> reports;
    for (const auto& name : wanted) {
        if (name == "bound-chain") reports.push_back(mdc::check_bound_chain(pop, budget));
        else if (name == "alpha-bound") reports.push_back(mdc::check_alpha_bound(pop, budget));
        else if (name == "matching-bound") reports.push_back(mdc::check_matching_bound(pop, budget));
        else if (name == "small-values") reports.push_back(mdc::check_small_value_characterizations(pop, budget));
        else if (name == "large-values") reports.push_back(mdc::check_large_value_characterizations(pop, budget));
        else if (name == "disconnected") reports.push_back(mdc::check_disconnected_bounds(pop, budget));
        else if (name == "bipartite-corona") {
            std::vector<mdc::Graph> bip{
                mdc::family_graph(mdc::FamilySpec::Path(3)), mdc::family_graph(mdc::FamilySpec::Path(5)),
                mdc::family_graph(mdc::FamilySpec::Cycle(4)), mdc::family_graph(mdc::FamilySpec::Cycle(6)),
                mdc::family_graph(mdc::FamilySpec::Star(5))};
            reports.push_back(mdc::check_bipartite_corona(bip, budget));
        } else {
            throw std::invalid_argument("unknown suite '" + name + "'");
        }
    }

    bool any_fail = false, any_skip = false;
    if (output == "json") {
        json out = json::array();
        for (const auto& rep : reports) out.push_back(report_to_json(rep));
        std::cout << out.dump(2) << "\n";
    }
    for (const auto& rep : reports) {
        any_fail = any_fail || !rep.failures.empty();
        any_skip = any_skip || !rep.skipped.empty();
        if (output != "json") {
            std::cout << (rep.ok() ? "[pass] " : "[FAIL] ") << rep.summary() << "\n";
            for (const auto& f : rep.failures)
                std::cout << "  counterexample " << f.graph << "\n    expected " << f.relation
                          << "\n    observed " << f.observed << "\n";
        }
    }
    if (any_fail) return kExitViolation;
    return any_skip ? kExitBudget : kExitOk;
}

int run_explore(int max_n, const std::string& random_spec, std::uint64_t seed, std::uint64_t budget_flag,
                const std::string& output) {
    auto budget = resolve_budget(budget_flag);
    mdc::GraphPopulation pop = mdc::GraphPopulation::Exhaustive(max_n);
    if (!random_spec.empty()) {
        int n = 0, count = 0;
        double p = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(random_spec);
        if (!(is >> n >> c1 >> p >> c2 >> count) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("--random expects n,p,count");
        pop = mdc::GraphPopulation::Random(n, p, seed, count);
    }
    auto res = mdc::explore_equality_chi_d(pop, budget);
    if (output == "json") {
        json out{{"population", pop.describe()},
                 {"tested", res.tested},
                 {"skipped", res.skipped},
                 {"equal", res.equal}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chi_md = chi_d on " << res.equal.size() << " of " << res.tested << " members ("
                  << res.skipped << " skipped)\n";
        for (const auto& enc : res.equal) std::cout << enc << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and theorem harness for majority dominator colorings"};
    app.require_subcommand(1);
    app.fallthrough();

    GraphSource solve_src, verify_src;
    std::string output = "text";
    std::uint64_t budget = 0;
    app.add_option("--output", output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* solve = app.add_subcommand("solve", "compute chi_md and the bound chain");
    add_source_options(solve, solve_src);
    solve->add_option("--budget", budget, "node budget for the searches");

    auto* verify = app.add_subcommand("verify", "check a coloring file");
    add_source_options(verify, verify_src);
    std::string coloring_path;
    verify->add_option("--coloring", coloring_path, "coloring file, one color per vertex")->required();

    auto* family = app.add_subcommand("family", "closed-form value and witness for a family");
    std::string family_text;
    family->add_option("spec", family_text, "family spec such as path:13")->required();

    auto* check = app.add_subcommand("check", "run theorem check suites");
    std::vector<std::string> suites;
    int max_n = 5;
    std::string random_spec;
    std::uint64_t seed = 1;
    check->add_option("--suite", suites,
                      "bound-chain, alpha-bound, matching-bound, small-values, large-values, "
                      "disconnected, bipartite-corona, or all");
    check->add_option("--max-n", max_n, "exhaustive population order cap (default 5)");
    check->add_option("--random", random_spec, "use a random population instead: n,p,count");
    check->add_option("--seed", seed, "random population seed");
    check->add_option("--budget", budget, "node budget per solve");

    auto* explore = app.add_subcommand("explore", "list graphs with chi_md = chi_d");
    int explore_max_n = 4;
    std::string explore_random;
    explore->add_option("--max-n", explore_max_n, "exhaustive population order cap (default 4)");
    explore->add_option("--random", explore_random, "use a random population instead: n,p,count");
    explore->add_option("--seed", seed, "random population seed");
    explore->add_option("--budget", budget, "node budget per solve");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(solve_src, output, budget);
        if (verify->parsed()) return run_verify(verify_src, coloring_path, output);
        if (family->parsed()) return run_family(family_text, output);
        if (check->parsed()) return run_check(suites, max_n, random_spec, seed, budget, output);
        if (explore->parsed()) return run_explore(explore_max_n, explore_random, seed, budget, output);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
