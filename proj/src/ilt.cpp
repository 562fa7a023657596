#include "coolnum/ilt.hpp"

#include "coolnum/error.hpp"

#include <numeric>
#include <string>

namespace coolnum {

NodeId IltGraph::last_clone_of(NodeId u) const
{
    const int previous = graph.order() / 2;
    if (iterations == 0 || u < 0 || u >= previous)
        throw InvalidArgument("node " + std::to_string(u) + " has no final-iteration clone");
    return previous + u;
}

IltGraph ilt_base(const Graph & g)
{
    IltGraph out;
    out.graph = g;
    out.base_n = g.order();
    out.parent.resize(static_cast<std::size_t>(g.order()));
    std::iota(out.parent.begin(), out.parent.end(), 0);
    out.origin = out.parent;
    out.last_clones.assign(static_cast<std::size_t>(g.order()), {});
    return out;
}

IltGraph ilt(const IltGraph & in)
{
    const Graph & g = in.graph;
    const int m = g.order();

    std::vector<Edge> e = g.edges();
    e.reserve(3 * e.size() + static_cast<std::size_t>(m));
    for (NodeId x = 0; x < m; ++x) {
        const NodeId clone = m + x;
        e.emplace_back(x, clone);
        for (NodeId w : g.neighbors(x))
            e.emplace_back(clone, w);
    }

    IltGraph out;
    out.graph = build_graph(2 * m, e);
    out.base_n = in.base_n;
    out.iterations = in.iterations + 1;
    out.parent.resize(static_cast<std::size_t>(2 * m));
    out.origin.resize(static_cast<std::size_t>(2 * m));
    out.last_clones.assign(static_cast<std::size_t>(in.base_n), {});
    for (NodeId x = 0; x < m; ++x) {
        out.parent[x] = x;
        out.origin[x] = in.origin[x];
        out.parent[m + x] = x;
        out.origin[m + x] = in.origin[x];
        out.last_clones[in.origin[x]].push_back(m + x);
    }
    return out;
}

IltGraph ilt(const Graph & g)
{
    return ilt(ilt_base(g));
}

IltGraph ilt_t(const Graph & g, int t)
{
    if (t < 1)
        throw InvalidArgument("ILT iteration count must be >= 1, got " + std::to_string(t));
    IltGraph out = ilt(g);
    for (int i = 1; i < t; ++i)
        out = ilt(out);
    return out;
}

} // namespace coolnum
