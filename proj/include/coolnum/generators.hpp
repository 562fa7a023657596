#pragma once

#include "coolnum/graph.hpp"

namespace coolnum {

/// A cell of the n x n grid, 1-indexed.
struct GridCoord {
    int row;
    int col;

    friend bool operator==(const GridCoord &, const GridCoord &) = default;
};

/// Row-major numbering: id = (row-1)*n + (col-1).
constexpr NodeId grid_id(int n, GridCoord c) noexcept { return (c.row - 1) * n + (c.col - 1); }
constexpr GridCoord grid_coord(int n, NodeId id) noexcept { return {id / n + 1, id % n + 1}; }

// Node numbering per family:
//   path         0..n-1 in path order
//   cycle        0..n-1 around the cycle
//   grid         row-major, see grid_id
//   caterpillar  spine v_1..v_d as 0..d-1, then the pendant of v_i (2 <= i <= d-1) as d+i-2
//   spider       head 0, leg j (0-based) at 1+j*r .. (j+1)*r ordered away from the head
//   complete     0..n-1
//   star         center 0, leaves 1..leaves

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int n);
Graph gen_complete_caterpillar(int d);
Graph gen_spider(int legs, int r);
Graph gen_complete(int n);
Graph gen_star(int leaves);

/// Id of the pendant attached to spine node v_i of CC_d (2 <= i <= d-1).
constexpr NodeId caterpillar_pendant(int d, int i) noexcept { return d + i - 2; }
/// Id of spine node v_i of CC_d (1 <= i <= d).
constexpr NodeId caterpillar_spine(int i) noexcept { return i - 1; }

/// Id of the node at distance `pos` (1..r) from the head on leg `leg` (0-based).
constexpr NodeId spider_node(int r, int leg, int pos) noexcept { return 1 + leg * r + (pos - 1); }

/// Connected graph on n nodes: a random spanning tree plus each remaining pair
/// with probability p. Deterministic for a given seed.
Graph gen_random_connected(int n, double p, unsigned seed);

} // namespace coolnum
