#include "oracles.hpp"

#include "coolnum/error.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/ilt.hpp"
#include "coolnum/solver.hpp"
#include "coolnum/strategies.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace coolnum;

namespace {

SearchLimits wide()
{
    return {solver_hard_cap, std::nullopt};
}

} // namespace

TEST_CASE("simplicial order")
{
    CHECK(simplicial_cmp({1, 2}, {2, 1}) == std::strong_ordering::less);
    CHECK(simplicial_cmp({2, 1}, {1, 3}) == std::strong_ordering::less);
    CHECK(simplicial_cmp({3, 3}, {3, 3}) == std::strong_ordering::equal);
    CHECK(simplicial_cmp({1, 3}, {1, 2}) == std::strong_ordering::greater);

    std::vector<GridCoord> cells;
    for (int r = 3; r >= 1; --r)
        for (int c = 3; c >= 1; --c)
            cells.push_back({r, c});
    std::sort(cells.begin(), cells.end(), [](GridCoord a, GridCoord b) { return simplicial_cmp(a, b) < 0; });
    const std::vector<GridCoord> expected{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}, {2, 3}, {3, 2}, {3, 3}};
    CHECK(cells == expected);
}

TEST_CASE("grid simplicial strategy")
{
    for (int n = 2; n <= 3; ++n)
        CHECK(grid_simplicial_strategy(n).round_count() == cooling_number(gen_grid(n)).value);

    const auto g15 = grid_simplicial_strategy(15);
    CHECK(g15.round_count() >= 22);
    CHECK(g15.round_count() <= 24);
    CHECK(g15.sources().front() == grid_id(15, {1, 1}));

    // The strategy is an ordinary cooling run, so it replays.
    CHECK(validate_sequence(gen_grid(6), grid_simplicial_strategy(6).sources()) == grid_simplicial_strategy(6));
}

TEST_CASE("grid window")
{
    CHECK(grid_cl_window(2).lo == 0);
    CHECK(*grid_cl_window(2).hi == 2);
    CHECK(grid_cl_window(8).lo == 10);
    CHECK(*grid_cl_window(8).hi == 12);
    CHECK(grid_cl_window(100).lo == 188);
    CHECK(grid_cl_window(5).kind == FormKind::window);
    CHECK_THROWS_AS(grid_cl_window(1), InvalidArgument);
}

TEST_CASE("path_diameter strategy")
{
    const auto p5 = path_diameter_strategy(gen_path(5));
    CHECK(p5 == std::vector<NodeId>{0, 2, 4});
    CHECK(validate_sequence(gen_path(5), p5).round_count() == 3);

    const Graph c8 = gen_cycle(8);
    const auto seq = path_diameter_strategy(c8);
    CHECK(seq.size() == 3u);
    CHECK(validate_sequence(c8, seq).round_count() >= 3);
    CHECK(diametral_path(c8).size() == 5u);

    const Graph k3 = gen_complete(3);
    CHECK(validate_sequence(k3, path_diameter_strategy(k3)).round_count() == 2);
}

TEST_CASE("caterpillar strategy")
{
    CHECK(caterpillar_strategy(6) == std::vector<NodeId>{0, 6, 7, 8, 9});
    for (int d = 3; d <= 7; ++d) {
        CAPTURE(d);
        const auto trace = validate_sequence(gen_complete_caterpillar(d), caterpillar_strategy(d));
        CHECK(trace.round_count() == d);
    }
    CHECK_THROWS_AS(caterpillar_strategy(2), InvalidArgument);
}

TEST_CASE("spider detection")
{
    const auto shape = detect_spider(gen_spider(4, 3));
    CHECK(shape.legs == 4);
    CHECK(shape.r == 3);
    CHECK_THROWS_AS(detect_spider(gen_cycle(5)), StrategyMismatch);
    CHECK_THROWS_AS(spider_strategy(gen_spider(3, 2)), StrategyMismatch);
    CHECK_THROWS_AS(spider_strategy(gen_grid(3)), StrategyMismatch);
}

TEST_CASE("spider strategy")
{
    // Two legs of length 3 is P_7.
    const auto p7 = spider_strategy(1, 3);
    CHECK(p7.certified.kind == FormKind::lower_bound);
    CHECK(p7.certified.lo == 4);
    CHECK(p7.trace.round_count() == 4);

    for (int m = 1; m <= 2; ++m)
        for (int r = 1; 1 + 2 * m * r <= 13; ++r) {
            CAPTURE(m);
            CAPTURE(r);
            const auto run = spider_strategy(m, r);
            const Graph g = gen_spider(2 * m, r);
            CHECK(validate_sequence(g, run.trace.sources()) == run.trace);
            CHECK(run.trace.round_count() <= cooling_number(g, wide()).value);
            if (run.certified.kind == FormKind::lower_bound)
                CHECK(run.trace.round_count() >= run.certified.lo);
        }

    CHECK(spider_strategy(gen_spider(4, 3)).trace == spider_strategy(2, 3).trace);
}

TEST_CASE("ILT path strategy")
{
    CHECK(ilt_path_strategy(6, 1).size() == 4u);
    CHECK(validate_sequence(ilt_t(gen_path(6), 1).graph, ilt_path_strategy(6, 1)).round_count() == 5);
    CHECK(validate_sequence(ilt_t(gen_path(5), 1).graph, ilt_path_strategy(5, 1)).round_count() == 4);
    CHECK(validate_sequence(ilt_t(gen_path(3), 2).graph, ilt_path_strategy(3, 2)).round_count() == 3);

    // Every entry is a final-iteration clone.
    const auto g = ilt_t(gen_path(6), 2);
    for (NodeId w : ilt_path_strategy(g))
        CHECK(w >= g.graph.order() / 2);
}

TEST_CASE("ILT sequence lift")
{
    const auto from = ilt_t(gen_path(2), 3);
    const auto to = ilt_t(gen_path(2), 2);
    const auto best = max_sequence_length(from.graph, wide());
    const auto seq = best.witness.sources();
    const auto lifted = ilt_lift_sequence(seq, from, to);
    CHECK(lifted.size() == seq.size());
    CHECK(validate_sequence(to.graph, lifted).source_count() == static_cast<int>(seq.size()));

    const std::vector<NodeId> single{from.last_clones[1][0]};
    CHECK(ilt_lift_sequence(single, from, to) == std::vector<NodeId>{to.last_clones[1][0]});

    // Consecutive entries with the same origin map to distinct clones.
    const std::vector<NodeId> twin{from.last_clones[0][0], from.last_clones[0][1]};
    const auto mapped = ilt_lift_sequence(twin, from, to);
    CHECK(mapped[0] != mapped[1]);
    CHECK(to.origin[mapped[0]] == 0);
    CHECK(to.origin[mapped[1]] == 0);
}

TEST_CASE("closed forms")
{
    CHECK(closed_form(Family::cycle, {{"n", 8}}).lo == 4);
    const auto path = closed_form(Family::path, {{"n", 14}});
    CHECK(path.kind == FormKind::exact);
    CHECK(path.lo == 8);
    CHECK(*path.hi == 8);
    CHECK(path.contains(8));
    CHECK(! path.contains(7));

    const auto grid = closed_form(Family::grid, {{"n", 5}});
    CHECK(grid.lo == 4);
    CHECK(*grid.hi == 6);

    CHECK(closed_form(Family::ilt_path, {{"n", 6}, {"t", 1}}).lo == 5);
    CHECK(closed_form(Family::ilt_path, {{"n", 5}, {"t", 1}}).lo == 4);
    CHECK(closed_form(Family::ilt_path, {{"n", 5}, {"t", 2}}).lo == 5);

    CHECK_THROWS_AS(closed_form(Family::cycle, {{"n", 2}}), InvalidArgument);
    CHECK_THROWS_AS(closed_form(Family::path, {}), InvalidArgument);
    CHECK(parse_family("ilt_path") == Family::ilt_path);
    CHECK_THROWS_AS(parse_family("hypercube"), InvalidArgument);

    const auto doc = nlohmann::json::parse(closed_form_to_json(grid));
    CHECK(doc["family"] == "grid");
    CHECK(doc["kind"] == "window");
    CHECK(doc["params"]["n"] == 5);
    CHECK(doc["lo"] == 4);
    CHECK(doc["hi"] == 6);
}
