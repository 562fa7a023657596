#pragma once

#include "coolnum/node_set.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace coolnum {

using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph on nodes 0..n-1.
///
/// Adjacency is kept in compressed form; every neighbor list is sorted and
/// duplicate-free, and u appears in adj(v) exactly when v appears in adj(u).
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    std::size_t size() const noexcept { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const noexcept
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    int degree(NodeId v) const noexcept { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool adjacent(NodeId u, NodeId v) const noexcept;

    /// Edge list with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Builds a graph, deduplicating repeated and reversed pairs.
/// Throws InvalidGraph on a negative order, an out-of-range endpoint or a self-loop.
Graph build_graph(int n, std::span<const Edge> edges);

inline Graph build_graph(int n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline constexpr int unreachable = std::numeric_limits<int>::max();

/// Hop distances from v; unreachable nodes get `unreachable`.
std::vector<int> bfs_distances(const Graph & g, NodeId v);

/// Hop distances from the nearest node of `sources`.
std::vector<int> bfs_distances(const Graph & g, const NodeSet & sources);

bool is_connected(const Graph & g);

/// Throws Disconnected unless g has at least one node and is connected.
void require_connected(const Graph & g);

int eccentricity(const Graph & g, NodeId v);

/// Largest shortest-path distance. Throws Disconnected for a disconnected graph.
int diameter(const Graph & g);

/// Returns cooled ∪ N(cooled); the input is not modified.
NodeSet closed_neighborhood(const Graph & g, const NodeSet & set);

} // namespace coolnum
