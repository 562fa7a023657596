#include "coolnum/verify.hpp"

#include "coolnum/bounds.hpp"
#include "coolnum/cooling.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/ilt.hpp"
#include "coolnum/solver.hpp"
#include "coolnum/strategies.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace coolnum {

namespace {

using Clock = std::chrono::steady_clock;

const SearchLimits wide{solver_hard_cap, std::nullopt};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

class Recorder {
public:
    Recorder(std::string name, std::string claim)
    {
        report_.name = std::move(name);
        report_.claim = std::move(claim);
    }

    template <typename... Parts>
    void check(bool ok, const Parts &... parts)
    {
        ++report_.instances;
        if (ok)
            return;
        ++report_.failures;
        std::ostringstream out;
        (out << ... << parts);
        report_.messages.push_back(out.str());
    }

    SuiteReport finish(Clock::time_point start)
    {
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return std::move(report_);
    }

private:
    SuiteReport report_;
};

int cl(const Graph & g) { return cooling_number(g, wide).value; }

SuiteReport path_formula()
{
    const auto start = Clock::now();
    Recorder rec("path-formula", "CL(P_n) = ceil((n+1)/2) for 1 <= n <= 14");
    for (int n = 1; n <= 14; ++n) {
        const int got = cl(gen_path(n));
        const int want = closed_form(Family::path, {{"n", n}}).lo;
        rec.check(got == want, "P_", n, ": solver ", got, ", formula ", want);
    }
    return rec.finish(start);
}

SuiteReport cycle_formula()
{
    const auto start = Clock::now();
    Recorder rec("cycle-formula", "CL(C_n) = ceil((n+2)/3) for 3 <= n <= 14");
    for (int n = 3; n <= 14; ++n) {
        const int got = cl(gen_cycle(n));
        const int want = closed_form(Family::cycle, {{"n", n}}).lo;
        rec.check(got == want, "C_", n, ": solver ", got, ", formula ", want);
    }
    rec.check(cl(gen_cycle(8)) == 4, "CL(C_8) != 4");
    return rec.finish(start);
}

SuiteReport caterpillar()
{
    const auto start = Clock::now();
    Recorder rec("caterpillar", "CL(CC_d) = d for 3 <= d <= 7, achieved by the pendant strategy");
    for (int d = 3; d <= 7; ++d) {
        const Graph g = gen_complete_caterpillar(d);
        const int solved = cl(g);
        const int played = validate_sequence(g, caterpillar_strategy(d)).round_count();
        rec.check(solved == d, "CC_", d, ": solver ", solved);
        rec.check(played == d, "CC_", d, ": strategy ", played);
    }
    return rec.finish(start);
}

SuiteReport bounds_sandwich()
{
    const auto start = Clock::now();
    Recorder rec("bounds-sandwich", "ceil((diam+2)/2) <= CL <= min(diam+1, ceil((n+1)/2)) on the corpus");
    for (const auto & [name, g] : standard_corpus()) {
        const int value = cl(g);
        const int d = diameter(g);
        const int n = g.order();
        const int lower = ceil_div(d + 2, 2);
        const int upper = std::min(d + 1, ceil_div(n + 1, 2));
        rec.check(lower <= value && value <= upper, name, ": CL ", value, " outside [", lower, ", ", upper, "]");
        const auto report = bounds_report(g, {iso_default_cap, 0});
        rec.check(report.best_lower() <= report.best_upper(), name, ": bounds report crosses");
    }
    return rec.finish(start);
}

SuiteReport burning()
{
    const auto start = Clock::now();
    Recorder rec("burning", "b(G) <= CL(G); equality when diam <= 2; b(P_9) = 3");
    for (const auto & [name, g] : standard_corpus()) {
        const int b = burning_number(g, wide).value;
        const int c = cl(g);
        rec.check(b <= c, name, ": b ", b, " > CL ", c);
        if (diameter(g) <= 2)
            rec.check(b == c, name, ": diameter <= 2 but b ", b, " != CL ", c);
    }
    const int b9 = burning_number(gen_path(9)).value;
    rec.check(b9 == 3, "b(P_9) = ", b9);
    return rec.finish(start);
}

SuiteReport isoperimetric()
{
    const auto start = Clock::now();
    Recorder rec("isoperimetric", "smoothness of exact profiles; I >= CL on the corpus; I = CL on paths n <= 14");
    for (const auto & [name, g] : standard_corpus()) {
        const auto profile = iso_profile_exact(g);
        const int n = g.order();
        bool smooth = true;
        for (int x = 0; x <= n; ++x)
            for (int y = 0; x + y <= n; ++y)
                smooth = smooth && profile.phi[x] - y <= profile.phi[x + y];
        rec.check(smooth, name, ": smoothness fails");
        const int bound = iso_upper_bound(profile).rounds;
        const int value = cl(g);
        rec.check(bound >= value, name, ": I ", bound, " < CL ", value);
    }
    for (int n = 1; n <= 14; ++n) {
        const Graph g = gen_path(n);
        const int bound = iso_upper_bound(iso_profile_exact(g)).rounds;
        const int value = cl(g);
        rec.check(bound == value, "P_", n, ": I ", bound, " != CL ", value);
    }
    return rec.finish(start);
}

SuiteReport grid_optimality()
{
    const auto start = Clock::now();
    Recorder rec("grid-optimality", "simplicial strategy rounds = CL(G_n) for n in {2, 3, 4}");
    for (int n = 2; n <= 4; ++n) {
        const int played = grid_simplicial_strategy(n).round_count();
        const int solved = cl(gen_grid(n));
        rec.check(played == solved, "G_", n, ": strategy ", played, ", solver ", solved);
    }
    return rec.finish(start);
}

SuiteReport grid_window()
{
    const auto start = Clock::now();
    Recorder rec("grid-window", "simplicial strategy rounds within [2n-2floor(log2(n+3)), +2] for 2 <= n <= 200");
    for (int n = 2; n <= 200; ++n) {
        const int played = grid_simplicial_strategy(n).round_count();
        const auto window = grid_cl_window(n);
        rec.check(window.contains(played), "G_", n, ": ", played, " outside [", window.lo, ", ", *window.hi, "]");
    }
    return rec.finish(start);
}

SuiteReport grid_profile()
{
    const auto start = Clock::now();
    Recorder rec("grid-profile", "grid_iso_profile(n) = iso_profile_exact(G_n) for n in {2, 3, 4}");
    for (int n = 2; n <= 4; ++n) {
        const auto fast = grid_iso_profile(n);
        const auto exact = iso_profile_exact(gen_grid(n));
        rec.check(fast.phi == exact.phi, "G_", n, ": profiles differ");
    }
    return rec.finish(start);
}

SuiteReport ilt_properties()
{
    const auto start = Clock::now();
    Recorder rec("ilt", "ILT path formula; CL(ILT(G)) >= CL(G); ILT_2 fixes the maximum sequence length");
    for (int n = 3; n <= 5; ++n)
        for (int t = 1; t <= 2; ++t) {
            const IltGraph g = ilt_t(gen_path(n), t);
            const int want = closed_form(Family::ilt_path, {{"n", n}, {"t", t}}).lo;
            const int solved = cl(g.graph);
            const int played = validate_sequence(g.graph, ilt_path_strategy(g)).round_count();
            rec.check(solved == want, "ILT_", t, "(P_", n, "): solver ", solved, ", formula ", want);
            rec.check(played == want, "ILT_", t, "(P_", n, "): strategy ", played, ", formula ", want);
        }

    for (const auto & [name, g] : standard_corpus()) {
        if (2 * g.order() > 24)
            continue;
        const int before = cl(g);
        const int after = cl(ilt(g).graph);
        rec.check(after >= before, name, ": CL(ILT) ", after, " < CL ", before);
    }

    const std::vector<NamedGraph> bases{
        {"P_2", gen_path(2)}, {"P_3", gen_path(3)}, {"K_3", gen_complete(3)}, {"K_1,3", gen_star(3)}};
    for (const auto & [name, g] : bases) {
        const Graph two = ilt_t(g, 2).graph;
        const Graph three = ilt_t(g, 3).graph;
        const int s2 = max_sequence_length(two, wide).value;
        const int s3 = max_sequence_length(three, wide).value;
        rec.check(s2 == s3, name, ": max sequence ILT_2 ", s2, ", ILT_3 ", s3);
        const int c2 = cl(two);
        const int c3 = cl(three);
        rec.check(c3 - c2 == 0 || c3 - c2 == 1, name, ": CL(ILT_2) ", c2, ", CL(ILT_3) ", c3);
    }
    return rec.finish(start);
}

SuiteReport spider()
{
    const auto start = Clock::now();
    Recorder rec("spider", "spider strategy meets its certified bound; CL = 2r+1 when m >= ceil(log2(r+1))");
    for (int m = 1; m <= 3; ++m)
        for (int r = 1; r <= 7; ++r) {
            const auto form = closed_form(Family::spider, {{"m", m}, {"r", r}});
            if (form.kind != FormKind::lower_bound)
                continue;
            const int played = spider_strategy(m, r).trace.round_count();
            rec.check(played >= form.lo, "spider(m=", m, ", r=", r, "): strategy ", played, " < bound ", form.lo);
        }
    for (auto [m, r] : {std::pair{1, 1}, {2, 2}, {2, 3}}) {
        const int solved = cl(gen_spider(2 * m, r));
        rec.check(solved == 2 * r + 1, "spider(m=", m, ", r=", r, "): solver ", solved, ", claimed ", 2 * r + 1);
    }
    return rec.finish(start);
}

SuiteReport engine_conformance()
{
    const auto start = Clock::now();
    Recorder rec("engine-conformance", "reference replays: CC_6 round labels and ILT(P_6) ending at round 5");

    const int d = 6;
    const Graph cat = gen_complete_caterpillar(d);
    const auto trace = validate_sequence(cat, caterpillar_strategy(d));
    const auto when = trace.cooled_round();
    for (int i = 1; i <= d; ++i)
        rec.check(when[caterpillar_spine(i)] == i, "CC_6 spine v_", i, " cooled in round ", when[caterpillar_spine(i)]);
    for (int i = 2; i <= d - 1; ++i)
        rec.check(when[caterpillar_pendant(d, i)] == i, "CC_6 pendant v_", i, "' cooled in round ",
            when[caterpillar_pendant(d, i)]);
    rec.check(trace.round_count() == 6, "CC_6 replay ends at round ", trace.round_count());

    // Base p_1..p_6 are ids 0..5, their clones 6..11.
    const IltGraph g = ilt(gen_path(6));
    const auto ilt_trace = validate_sequence(g.graph, {6, 7, 9, 10});
    const auto labels = ilt_trace.cooled_round();
    const std::vector<int> expected{2, 2, 3, 4, 4, 5, 1, 2, 3, 3, 4, 5};
    rec.check(labels == expected, "ILT(P_6) cooling rounds differ from the reference labels");
    rec.check(ilt_trace.round_count() == 5, "ILT(P_6) replay ends at round ", ilt_trace.round_count());
    return rec.finish(start);
}

const std::map<std::string, std::function<SuiteReport()>> & registry()
{
    static const std::map<std::string, std::function<SuiteReport()>> suites{
        {"path-formula", path_formula},
        {"cycle-formula", cycle_formula},
        {"caterpillar", caterpillar},
        {"bounds-sandwich", bounds_sandwich},
        {"burning", burning},
        {"isoperimetric", isoperimetric},
        {"grid-optimality", grid_optimality},
        {"grid-window", grid_window},
        {"grid-profile", grid_profile},
        {"ilt", ilt_properties},
        {"spider", spider},
        {"engine-conformance", engine_conformance},
    };
    return suites;
}

} // namespace

const std::vector<NamedGraph> & standard_corpus()
{
    static const std::vector<NamedGraph> corpus = [] {
        std::vector<NamedGraph> out;
        auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
        for (int n = 1; n <= 12; ++n)
            add("P_" + std::to_string(n), gen_path(n));
        for (int n = 3; n <= 12; ++n)
            add("C_" + std::to_string(n), gen_cycle(n));
        for (int n = 3; n <= 12; ++n)
            add("K_" + std::to_string(n), gen_complete(n));
        for (int k = 2; k <= 11; ++k)
            add("K_1," + std::to_string(k), gen_star(k));
        for (int n = 2; n <= 3; ++n)
            add("G_" + std::to_string(n), gen_grid(n));
        for (int d = 3; d <= 7; ++d)
            add("CC_" + std::to_string(d), gen_complete_caterpillar(d));
        for (int legs = 3; legs <= 11; ++legs)
            for (int r = 1; 1 + legs * r <= 12; ++r)
                add("spider(" + std::to_string(legs) + "," + std::to_string(r) + ")", gen_spider(legs, r));
        for (int n = 2; n <= 6; ++n)
            add("ILT(P_" + std::to_string(n) + ")", ilt(gen_path(n)).graph);
        for (int n = 4; n <= 6; ++n)
            add("ILT(C_" + std::to_string(n) + ")", ilt(gen_cycle(n)).graph);
        add("ILT(K_3)", ilt(gen_complete(3)).graph);
        add("ILT(K_1,3)", ilt(gen_star(3)).graph);
        add("ILT_2(K_1)", ilt_t(gen_path(1), 2).graph);
        add("ILT_2(P_2)", ilt_t(gen_path(2), 2).graph);
        add("ILT_2(P_3)", ilt_t(gen_path(3), 2).graph);
        add("ILT_3(K_1)", ilt_t(gen_path(1), 3).graph);

        const double densities[] = {0.05, 0.15, 0.3, 0.5};
        unsigned seed = 1;
        for (int n = 4; n <= 12; ++n)
            for (double p : densities)
                for (int k = 0; k < 5; ++k, ++seed)
                    add("random(n=" + std::to_string(n) + ",p=" + std::to_string(p).substr(0, 4) + ",seed="
                            + std::to_string(seed) + ")",
                        gen_random_connected(n, p, seed));
        return out;
    }();
    return corpus;
}

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string & name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw UnknownSuite("unknown suite \"" + name + "\"");
    return it->second();
}

} // namespace coolnum
