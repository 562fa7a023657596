#pragma once

#include "coolnum/graph.hpp"

#include <vector>

namespace coolnum {

/// A graph produced by iterating the local-transitivity clone operation,
/// together with each node's lineage.
///
/// Clones of one iteration on an m-node graph occupy ids m..2m-1, the clone of
/// node i being m+i, so every node of the previous iteration keeps its id.
struct IltGraph {
    Graph graph;
    int base_n = 0;
    int iterations = 0;
    /// Node of the previous iteration that u equals (for old nodes) or clones.
    std::vector<NodeId> parent;
    /// Ultimate pre-image of u in the base graph.
    std::vector<NodeId> origin;
    /// For each base node x, the clones created in the final iteration with origin x, ascending.
    std::vector<std::vector<NodeId>> last_clones;

    /// Clone of `u` created by the final iteration (u must be a previous-iteration node).
    NodeId last_clone_of(NodeId u) const;
};

/// Wraps a plain graph as a zero-iteration lineage (parent and origin are identity).
IltGraph ilt_base(const Graph & g);

IltGraph ilt(const IltGraph & g);
IltGraph ilt(const Graph & g);

/// t-fold application; t must be at least 1.
IltGraph ilt_t(const Graph & g, int t);

} // namespace coolnum
