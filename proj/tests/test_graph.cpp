#include "oracles.hpp"

#include "coolnum/error.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/ilt.hpp"
#include "coolnum/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace coolnum;

namespace {

std::map<int, int> degree_histogram(const Graph & g)
{
    std::map<int, int> h;
    for (NodeId v = 0; v < g.order(); ++v)
        ++h[g.degree(v)];
    return h;
}

bool handshake(const Graph & g)
{
    std::size_t total = 0;
    for (NodeId v = 0; v < g.order(); ++v)
        total += static_cast<std::size_t>(g.degree(v));
    return total == 2 * g.size();
}

} // namespace

TEST_CASE("build_graph basics")
{
    const Graph k1 = build_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph p2 = build_graph(2, {{0, 1}});
    CHECK(p2.size() == 1);
    CHECK(p2.adjacent(0, 1));
    CHECK(p2.adjacent(1, 0));

    const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (NodeId v = 0; v < 4; ++v)
        CHECK(c4.degree(v) == 2);
    CHECK(c4 == gen_cycle(4));
}

TEST_CASE("build_graph deduplicates and rejects bad edges")
{
    const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InvalidGraph);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InvalidGraph);
    CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), InvalidGraph);
    CHECK_THROWS_AS(build_graph(-1, {}), InvalidGraph);
    // Disconnected graphs are legal here.
    CHECK_NOTHROW(build_graph(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("bfs distances")
{
    CHECK(bfs_distances(gen_path(5), 0) == std::vector<int>{0, 1, 2, 3, 4});

    for (NodeId v = 0; v < 8; ++v) {
        auto d = bfs_distances(gen_cycle(8), v);
        CHECK(*std::max_element(d.begin(), d.end()) == 4);
    }

    const auto d = bfs_distances(gen_grid(3), grid_id(3, {1, 1}));
    CHECK(d[grid_id(3, {3, 3})] == 4);

    const auto split = bfs_distances(build_graph(3, {{0, 1}}), 0);
    CHECK(split[2] == unreachable);
}

TEST_CASE("diameter")
{
    for (int n = 1; n <= 9; ++n)
        CHECK(diameter(gen_path(n)) == n - 1);
    CHECK(diameter(gen_complete_caterpillar(6)) == oracle::diameter(gen_complete_caterpillar(6)));
    CHECK(diameter(gen_complete_caterpillar(6)) == 5);
    CHECK(diameter(ilt(gen_path(6)).graph) == 5);
    CHECK_THROWS_AS(diameter(build_graph(3, {{0, 1}})), Disconnected);
    CHECK_THROWS_AS(diameter(Graph{}), Disconnected);

    for (const auto & [name, g] : standard_corpus()) {
        CAPTURE(name);
        CHECK(diameter(g) == oracle::diameter(g));
    }
}

TEST_CASE("generator sizes and numbering")
{
    CHECK(gen_complete_caterpillar(6).order() == 10);
    const Graph g3 = gen_grid(3);
    CHECK(g3.order() == 9);
    CHECK(g3.size() == 12);

    // spider(2, 3) is P_7 with the head in the middle.
    const Graph sp = gen_spider(2, 3);
    CHECK(sp.order() == 7);
    CHECK(degree_histogram(sp) == degree_histogram(gen_path(7)));
    CHECK(diameter(sp) == 6);
    CHECK(sp.degree(0) == 2);

    CHECK(grid_coord(4, grid_id(4, {3, 2})) == GridCoord{3, 2});
    CHECK(grid_id(3, {1, 1}) == 0);
    CHECK(grid_id(3, {3, 3}) == 8);

    CHECK_THROWS_AS(gen_path(0), InvalidArgument);
    CHECK_THROWS_AS(gen_cycle(2), InvalidArgument);
    CHECK_THROWS_AS(gen_grid(0), InvalidArgument);
    CHECK_THROWS_AS(gen_complete_caterpillar(2), InvalidArgument);
    CHECK_THROWS_AS(gen_spider(0, 2), InvalidArgument);
    CHECK_THROWS_AS(gen_spider(2, 0), InvalidArgument);
}

TEST_CASE("generator degree sequences")
{
    for (int n = 2; n <= 12; ++n) {
        const Graph p = gen_path(n);
        CHECK(handshake(p));
        auto h = degree_histogram(p);
        CHECK(h[1] == 2);
        CHECK(h[2] == n - 2);
    }
    for (int n = 3; n <= 12; ++n) {
        const Graph c = gen_cycle(n);
        CHECK(handshake(c));
        CHECK(degree_histogram(c) == std::map<int, int>{{2, n}});
    }
    for (int n = 2; n <= 8; ++n) {
        const Graph g = gen_grid(n);
        CHECK(handshake(g));
        auto h = degree_histogram(g);
        CHECK(h[2] == 4);
        CHECK(h[3] == 4 * (n - 2));
        CHECK(h[4] == (n - 2) * (n - 2));
        CHECK(g.size() == static_cast<std::size_t>(2 * n * (n - 1)));
    }
    for (int d = 3; d <= 9; ++d) {
        const Graph g = gen_complete_caterpillar(d);
        CHECK(handshake(g));
        CHECK(g.degree(caterpillar_spine(1)) == 1);
        CHECK(g.degree(caterpillar_spine(d)) == 1);
        for (int i = 2; i <= d - 1; ++i) {
            const int deg = g.degree(caterpillar_spine(i));
            CHECK((deg == 3 || deg == 4));
            CHECK(g.degree(caterpillar_pendant(d, i)) == 1);
        }
    }
    for (int legs = 1; legs <= 6; ++legs)
        for (int r = 1; r <= 4; ++r) {
            const Graph g = gen_spider(legs, r);
            CHECK(handshake(g));
            CHECK(g.degree(0) == legs);
            CHECK(g.order() == 1 + legs * r);
        }
}

TEST_CASE("ILT construction")
{
    const IltGraph p3 = ilt(gen_path(3));
    CHECK(p3.graph.order() == 6);
    CHECK(p3.graph.size() == 9);

    CHECK(ilt(gen_path(1)).graph == gen_path(2));

    CHECK(ilt_t(gen_path(6), 1).graph.order() == 12);
    CHECK(ilt_t(gen_path(3), 2).graph.order() == 12);
    CHECK(ilt_t(gen_path(2), 3).graph.order() == 16);
    CHECK_THROWS_AS(ilt_t(gen_path(3), 0), InvalidArgument);

    // Clone of x is adjacent to x and exactly N(x) among previous nodes.
    const Graph base = gen_complete_caterpillar(5);
    const IltGraph once = ilt(base);
    const int m = base.order();
    for (NodeId x = 0; x < m; ++x) {
        std::vector<NodeId> expected{x};
        for (NodeId w : base.neighbors(x))
            expected.push_back(w);
        std::sort(expected.begin(), expected.end());
        const auto nb = once.graph.neighbors(m + x);
        CHECK(std::vector<NodeId>(nb.begin(), nb.end()) == expected);
        CHECK(once.parent[m + x] == x);
        CHECK(once.origin[m + x] == x);
    }
}

TEST_CASE("ILT lineage")
{
    const Graph base = gen_star(3);
    for (int t = 1; t <= 4; ++t) {
        const IltGraph g = ilt_t(base, t);
        CHECK(g.graph.order() == base.order() << t);
        CHECK(g.iterations == t);
        for (NodeId u = 0; u < g.graph.order(); ++u) {
            CHECK(g.origin[u] < base.order());
            CHECK(g.origin[g.parent[u]] == g.origin[u]);
            CHECK(g.origin[g.origin[u]] == g.origin[u]);
        }
        for (NodeId x = 0; x < base.order(); ++x) {
            CHECK(g.last_clones[x].size() == static_cast<std::size_t>(1) << (t - 1));
            if (t >= 2)
                CHECK(g.last_clones[x].size() >= 2);
        }
    }
}

TEST_CASE("ILT edge recurrence and preserved distances")
{
    for (const auto & [name, g] : standard_corpus()) {
        CAPTURE(name);
        const IltGraph out = ilt(g);
        CHECK(out.graph.size() == 3 * g.size() + static_cast<std::size_t>(g.order()));
        if (diameter(g) >= 2) {
            const auto before = oracle::floyd(g);
            const auto after = oracle::floyd(out.graph);
            bool same = true;
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v)
                    same = same && before[u][v] == after[u][v];
            CHECK(same);
            CHECK(diameter(out.graph) == diameter(g));
        }
    }
    CHECK(diameter(ilt(gen_complete(4)).graph) == 2);
}

TEST_CASE("corpus is large and connected")
{
    const auto & corpus = standard_corpus();
    CHECK(corpus.size() >= 200);
    for (const auto & [name, g] : corpus) {
        CAPTURE(name);
        CHECK(is_connected(g));
        CHECK(g.order() <= 12);
    }
}

TEST_CASE("random connected graphs are reproducible")
{
    CHECK(gen_random_connected(10, 0.2, 7) == gen_random_connected(10, 0.2, 7));
    for (unsigned seed = 0; seed < 50; ++seed)
        CHECK(is_connected(gen_random_connected(9, 0.1, seed)));
}
