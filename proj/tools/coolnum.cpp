// coolnum: command-line front end for the cooling-number library.
//
// Exit codes: 0 success, 1 usage/input error or failed verification,
// 2 solver limit exceeded, 3 disconnected graph, 4 strategy/family mismatch,
// 5 unknown verification suite.

#include "coolnum/bounds.hpp"
#include "coolnum/cooling.hpp"
#include "coolnum/error.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/graph_io.hpp"
#include "coolnum/ilt.hpp"
#include "coolnum/solver.hpp"
#include "coolnum/strategies.hpp"
#include "coolnum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>

using namespace coolnum;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failure = 1, over_limit = 2, disconnected = 3, mismatch = 4, unknown_suite = 5 };

struct FamilyArgs {
    int n = 0;
    int d = 0;
    int legs = 0;
    int r = 0;
    int m = 0;
    int leaves = 0;
    int t = 1;
    std::string base;
};

Graph make_family(const std::string & family, const FamilyArgs & a);

IltGraph make_ilt(const std::string & base_spec, int t)
{
    const auto colon = base_spec.find(':');
    if (colon == std::string::npos)
        throw InvalidArgument("--base must look like family:param, e.g. path:6");
    const std::string family = base_spec.substr(0, colon);
    int value = 0;
    try {
        value = std::stoi(base_spec.substr(colon + 1));
    }
    catch (const std::exception &) {
        throw InvalidArgument("--base parameter must be an integer in \"" + base_spec + "\"");
    }
    FamilyArgs inner;
    inner.n = inner.d = inner.leaves = value;
    return ilt_t(make_family(family, inner), t);
}

Graph make_family(const std::string & family, const FamilyArgs & a)
{
    if (family == "path")
        return gen_path(a.n);
    if (family == "cycle")
        return gen_cycle(a.n);
    if (family == "grid")
        return gen_grid(a.n);
    if (family == "complete")
        return gen_complete(a.n);
    if (family == "star")
        return gen_star(a.leaves);
    if (family == "caterpillar")
        return gen_complete_caterpillar(a.d);
    if (family == "spider")
        return gen_spider(a.legs, a.r);
    if (family == "ilt")
        return make_ilt(a.base, a.t).graph;
    throw InvalidArgument("unknown family \"" + family + "\"");
}

Graph load(const std::string & path)
{
    std::vector<std::string> warnings;
    Graph g = read_graph(path, &warnings);
    for (const auto & w : warnings)
        std::cerr << "warning: " << w << "\n";
    return g;
}

SearchLimits limits_from(int max_nodes, int time_budget_ms, int fallback)
{
    SearchLimits limits{max_nodes > 0 ? max_nodes : default_max_nodes(fallback), std::nullopt};
    if (time_budget_ms > 0)
        limits.time_budget = std::chrono::milliseconds(time_budget_ms);
    return limits;
}

void emit_trace(const CoolingTrace & trace, const std::string & out)
{
    if (! out.empty())
        write_trace(trace, out);
}

/// Finds parameters under which `g` is exactly the canonical member of a strategy's family.
int match_square(const Graph & g)
{
    const int n = static_cast<int>(std::lround(std::sqrt(g.order())));
    if (n < 1 || n * n != g.order() || g != gen_grid(n))
        throw StrategyMismatch("input is not a canonical n x n grid");
    return n;
}

int match_caterpillar(const Graph & g)
{
    const int d = (g.order() + 2) / 2;
    if (d < 3 || 2 * d - 2 != g.order() || g != gen_complete_caterpillar(d))
        throw StrategyMismatch("input is not a canonical complete caterpillar");
    return d;
}

IltGraph match_ilt_path(const Graph & g)
{
    for (int t = 1; (g.order() >> t) >= 3; ++t) {
        const int n = g.order() >> t;
        if ((n << t) != g.order())
            break;
        IltGraph candidate = ilt_t(gen_path(n), t);
        if (candidate.graph == g)
            return candidate;
    }
    throw StrategyMismatch("input is not ILT_t(P_n) in canonical numbering with n >= 3");
}

int run_verify(const std::string & suite, bool as_json)
{
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
            throw UnknownSuite("unknown suite \"" + suite + "\"");
        names.push_back(suite);
    }

    bool all_passed = true;
    ojson doc = ojson::array();
    for (const auto & name : names) {
        const auto report = run_suite(name);
        all_passed = all_passed && report.passed();
        if (as_json) {
            doc.push_back({{"suite", report.name}, {"passed", report.passed()}, {"instances", report.instances},
                {"failures", report.failures}, {"messages", report.messages}});
        }
        else {
            std::cout << (report.passed() ? "PASS  " : "FAIL  ") << report.name << "  " << report.instances
                      << " checks, " << report.failures << " failed  (" << report.elapsed.count() << " ms)\n";
            for (const auto & m : report.messages)
                std::cout << "      " << m << "\n";
        }
    }
    if (as_json)
        std::cout << doc.dump() << "\n";
    return all_passed ? ok : failure;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Cooling number toolkit: generate graphs, solve exactly, evaluate bounds and strategies"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print one JSON document on stdout");

    // gen
    auto * gen = app.add_subcommand("gen", "Generate a graph of a named family");
    std::string gen_family, gen_out, gen_dot;
    FamilyArgs fa;
    gen->add_option("family", gen_family, "path | cycle | grid | complete | star | caterpillar | spider | ilt")->required();
    gen->add_option("--n", fa.n, "Order (path, cycle, complete) or side length (grid)");
    gen->add_option("--d", fa.d, "Caterpillar spine length");
    gen->add_option("--legs", fa.legs, "Spider leg count");
    gen->add_option("--r", fa.r, "Spider leg length");
    gen->add_option("--leaves", fa.leaves, "Star leaf count");
    gen->add_option("--base", fa.base, "ILT base graph as family:param, e.g. path:6");
    gen->add_option("--t", fa.t, "ILT iterations");
    gen->add_option("--out,-o", gen_out, "Graph JSON output path (stdout if omitted)");
    gen->add_option("--dot", gen_dot, "Also export Graphviz DOT to this path");

    // exact / seqlen / burn share their options
    struct SolveArgs {
        std::string in, out;
        int max_nodes = 0;
        int jobs = 1;
        int time_budget_ms = 0;
        bool no_prune = false;
        bool no_memo = false;
        bool vertex_transitive = false;
        bool stats = false;
    };
    SolveArgs sa;
    auto add_solve = [&](const char * name, const char * help, bool search_options) {
        auto * cmd = app.add_subcommand(name, help);
        cmd->add_option("--in,-i", sa.in, "Graph JSON input")->required()->check(CLI::ExistingFile);
        cmd->add_option("--out,-o", sa.out, "Witness trace JSON output");
        cmd->add_option("--max-nodes", sa.max_nodes, "Override the solver's node cap");
        cmd->add_option("--time-budget-ms", sa.time_budget_ms, "Give up after this many milliseconds");
        cmd->add_flag("--stats", sa.stats, "Print search statistics to stderr");
        if (search_options) {
            cmd->add_option("--jobs,-j", sa.jobs, "Worker threads for first-source branches")->check(CLI::PositiveNumber);
            cmd->add_flag("--no-prune", sa.no_prune, "Disable bound-based pruning");
            cmd->add_flag("--no-memo", sa.no_memo, "Disable memoization");
            cmd->add_flag("--vertex-transitive", sa.vertex_transitive, "Fix the first source to node 0");
        }
        return cmd;
    };
    auto * exact = add_solve("exact", "Exact cooling number with a witness trace", true);
    auto * seqlen = add_solve("seqlen", "Maximum cooling-sequence length with a witness trace", true);
    auto * burn = add_solve("burn", "Exact burning number with a witness trace", false);

    // bounds
    auto * bounds = app.add_subcommand("bounds", "All computable bounds on the cooling number (JSON)");
    std::string bounds_in;
    BoundsOptions bo;
    bounds->add_option("--in,-i", bounds_in, "Graph JSON input")->required()->check(CLI::ExistingFile);
    bounds->add_option("--iso-cap", bo.iso_cap, "Largest order for the exact isoperimetric profile");
    bounds->add_option("--burning-cap", bo.burning_cap, "Largest order for the exact burning number");

    // strategy
    auto * strategy = app.add_subcommand("strategy", "Run a constructive cooling strategy");
    std::string strategy_name, strategy_in, strategy_out;
    FamilyArgs st;
    strategy->add_option("name", strategy_name, "grid-simplicial | caterpillar | spider | ilt-path | path-diameter")
        ->required();
    auto * st_in = strategy->add_option("--in,-i", strategy_in, "Graph JSON input instead of family parameters")
                       ->check(CLI::ExistingFile);
    auto * st_n = strategy->add_option("--n", st.n, "Grid side length or ILT base path order");
    auto * st_d = strategy->add_option("--d", st.d, "Caterpillar spine length");
    auto * st_m = strategy->add_option("--m", st.m, "Spider half leg count (2m legs)");
    auto * st_r = strategy->add_option("--r", st.r, "Spider leg length");
    auto * st_t = strategy->add_option("--t", st.t, "ILT iterations");
    for (auto * opt : {st_n, st_d, st_m, st_r, st_t})
        st_in->excludes(opt);
    strategy->add_option("--out,-o", strategy_out, "Trace JSON output");

    // verify
    auto * verify = app.add_subcommand("verify", "Run a verification suite (or \"all\")");
    std::string suite;
    verify->add_option("suite", suite, "Suite name or all")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        if (*gen) {
            const Graph g = make_family(gen_family, fa);
            if (! gen_out.empty())
                write_graph(g, gen_out);
            if (! gen_dot.empty()) {
                DotOptions dot;
                if (gen_family == "grid")
                    dot.grid_length = fa.n;
                export_dot(g, gen_dot, dot);
            }
            if (gen_out.empty())
                std::cout << graph_to_json(g);
            else if (as_json)
                std::cout << ojson{{"n", g.order()}, {"edges", g.size()}}.dump() << "\n";
            else
                std::cout << "n=" << g.order() << " edges=" << g.size() << "\n";
            return ok;
        }

        if (*exact || *seqlen || *burn) {
            const Graph g = load(sa.in);
            SearchResult result;
            std::string quantity;
            if (*burn) {
                quantity = "burning_number";
                result = burning_number(g, limits_from(sa.max_nodes, sa.time_budget_ms, 24));
            }
            else {
                SolverOptions options{! sa.no_prune, ! sa.no_memo, sa.jobs, sa.vertex_transitive};
                const auto limits = limits_from(sa.max_nodes, sa.time_budget_ms, 20);
                if (*exact) {
                    quantity = "cooling_number";
                    result = cooling_number(g, limits, options);
                }
                else {
                    quantity = "max_sequence_length";
                    result = max_sequence_length(g, limits, options);
                }
            }
            emit_trace(result.witness, sa.out);
            if (as_json)
                std::cout << ojson{{quantity, result.value}, {"sources", result.witness.sources()},
                                 {"rounds", result.witness.round_count()}}
                                 .dump()
                          << "\n";
            else
                std::cout << result.value << "\n";
            if (sa.stats)
                std::cerr << "expanded=" << result.stats.expanded << " memo_hits=" << result.stats.memo_hits
                          << " wall_us=" << result.stats.wall.count() << "\n";
            return ok;
        }

        if (*bounds) {
            std::cout << bounds_to_json(bounds_report(load(bounds_in), bo));
            return ok;
        }

        if (*strategy) {
            const bool from_file = ! strategy_in.empty();
            const Graph input = from_file ? load(strategy_in) : Graph{};
            CoolingTrace trace;
            std::optional<ClosedForm> certified;
            if (strategy_name == "grid-simplicial") {
                const int n = from_file ? match_square(input) : st.n;
                trace = grid_simplicial_strategy(n);
                if (n >= 2)
                    certified = grid_cl_window(n);
            }
            else if (strategy_name == "caterpillar") {
                const int d = from_file ? match_caterpillar(input) : st.d;
                trace = validate_sequence(gen_complete_caterpillar(d), caterpillar_strategy(d));
                certified = closed_form(Family::caterpillar, {{"d", d}});
            }
            else if (strategy_name == "spider") {
                auto run = from_file ? spider_strategy(input) : spider_strategy(st.m, st.r);
                trace = std::move(run.trace);
                certified = run.certified;
            }
            else if (strategy_name == "ilt-path") {
                const IltGraph g = from_file ? match_ilt_path(input) : ilt_t(gen_path(st.n), st.t);
                trace = validate_sequence(g.graph, ilt_path_strategy(g));
                certified = closed_form(Family::ilt_path, {{"n", g.base_n}, {"t", g.iterations}});
            }
            else if (strategy_name == "path-diameter") {
                if (! from_file)
                    throw InvalidArgument("path-diameter needs --in");
                trace = validate_sequence(input, path_diameter_strategy(input));
                const int d = diameter(input);
                certified = ClosedForm{Family::path, {}, FormKind::lower_bound, (d + 3) / 2, std::nullopt};
            }
            else
                throw StrategyMismatch("unknown strategy \"" + strategy_name + "\"");

            emit_trace(trace, strategy_out);
            if (as_json) {
                ojson doc{{"strategy", strategy_name}, {"rounds", trace.round_count()}, {"sources", trace.sources()}};
                doc["certified"] = certified ? ojson::parse(closed_form_to_json(*certified)) : ojson(nullptr);
                std::cout << doc.dump() << "\n";
            }
            else {
                std::cout << "rounds=" << trace.round_count();
                if (certified) {
                    std::cout << " certified=" << to_string(certified->kind) << "[" << certified->lo << ",";
                    if (certified->hi)
                        std::cout << *certified->hi;
                    std::cout << "]";
                }
                std::cout << "\n";
            }
            return ok;
        }

        if (*verify)
            return run_verify(suite, as_json);
    }
    catch (const LimitExceeded & e) {
        std::cerr << "error: " << e.what() << "\n";
        return over_limit;
    }
    catch (const Disconnected & e) {
        std::cerr << "error: " << e.what() << "\n";
        return disconnected;
    }
    catch (const StrategyMismatch & e) {
        std::cerr << "error: " << e.what() << "\n";
        return mismatch;
    }
    catch (const UnknownSuite & e) {
        std::cerr << "error: " << e.what() << "; available: all";
        for (const auto & name : suite_names())
            std::cerr << ", " << name;
        std::cerr << "\n";
        return unknown_suite;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}
