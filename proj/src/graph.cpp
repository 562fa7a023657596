#include "coolnum/graph.hpp"

#include "coolnum/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace coolnum {

bool Graph::adjacent(NodeId u, NodeId v) const noexcept
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size());
    for (NodeId u = 0; u < order(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InvalidGraph("node count must be non-negative, got " + std::to_string(n));

    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v)
                + ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InvalidGraph("self-loop at node " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    Graph g;
    g.offsets_.reserve(adj.size() + 1);
    g.offsets_.push_back(0);
    for (auto & nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.targets_.insert(g.targets_.end(), nb.begin(), nb.end());
        g.offsets_.push_back(g.targets_.size());
    }
    return g;
}

std::vector<int> bfs_distances(const Graph & g, const NodeSet & sources)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), unreachable);
    std::deque<NodeId> queue;
    for (NodeId s : sources.to_vector()) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (! queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(u))
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph & g, NodeId v)
{
    NodeSet s(g.order());
    s.insert(v);
    return bfs_distances(g, s);
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        return false;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == unreachable; });
}

void require_connected(const Graph & g)
{
    if (g.order() == 0)
        throw Disconnected("graph has no nodes");
    if (! is_connected(g))
        throw Disconnected();
}

int eccentricity(const Graph & g, NodeId v)
{
    auto d = bfs_distances(g, v);
    return *std::max_element(d.begin(), d.end());
}

int diameter(const Graph & g)
{
    require_connected(g);
    int best = 0;
    for (NodeId v = 0; v < g.order(); ++v)
        best = std::max(best, eccentricity(g, v));
    return best;
}

NodeSet closed_neighborhood(const Graph & g, const NodeSet & set)
{
    NodeSet out = set;
    for (NodeId v : set.to_vector())
        for (NodeId w : g.neighbors(v))
            out.insert(w);
    return out;
}

} // namespace coolnum
