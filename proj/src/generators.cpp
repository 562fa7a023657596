#include "coolnum/generators.hpp"

#include "coolnum/error.hpp"

#include <random>
#include <string>

namespace coolnum {

namespace {

void require_at_least(const char * family, const char * param, int value, int minimum)
{
    if (value < minimum)
        throw InvalidArgument(std::string(family) + ": " + param + " must be >= "
            + std::to_string(minimum) + ", got " + std::to_string(value));
}

} // namespace

Graph gen_path(int n)
{
    require_at_least("path", "n", n, 1);
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph gen_cycle(int n)
{
    require_at_least("cycle", "n", n, 3);
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph gen_grid(int n)
{
    require_at_least("grid", "n", n, 1);
    std::vector<Edge> e;
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col) {
            NodeId id = grid_id(n, {row, col});
            if (col < n)
                e.emplace_back(id, grid_id(n, {row, col + 1}));
            if (row < n)
                e.emplace_back(id, grid_id(n, {row + 1, col}));
        }
    return build_graph(n * n, e);
}

Graph gen_complete_caterpillar(int d)
{
    require_at_least("caterpillar", "d", d, 3);
    std::vector<Edge> e;
    for (int i = 1; i < d; ++i)
        e.emplace_back(caterpillar_spine(i), caterpillar_spine(i + 1));
    for (int i = 2; i <= d - 1; ++i)
        e.emplace_back(caterpillar_spine(i), caterpillar_pendant(d, i));
    return build_graph(2 * d - 2, e);
}

Graph gen_spider(int legs, int r)
{
    require_at_least("spider", "legs", legs, 1);
    require_at_least("spider", "r", r, 1);
    std::vector<Edge> e;
    for (int leg = 0; leg < legs; ++leg) {
        e.emplace_back(0, spider_node(r, leg, 1));
        for (int pos = 1; pos < r; ++pos)
            e.emplace_back(spider_node(r, leg, pos), spider_node(r, leg, pos + 1));
    }
    return build_graph(1 + legs * r, e);
}

Graph gen_complete(int n)
{
    require_at_least("complete", "n", n, 1);
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph gen_star(int leaves)
{
    require_at_least("star", "leaves", leaves, 1);
    std::vector<Edge> e;
    for (NodeId v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return build_graph(leaves + 1, e);
}

Graph gen_random_connected(int n, double p, unsigned seed)
{
    require_at_least("random", "n", n, 1);
    std::mt19937 rng(seed);
    std::vector<Edge> e;
    for (NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<NodeId> pick(0, v - 1);
        e.emplace_back(pick(rng), v);
    }
    std::bernoulli_distribution coin(p);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return build_graph(n, e);
}

} // namespace coolnum
