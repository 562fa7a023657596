#include "coolnum/bounds.hpp"

#include "coolnum/error.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

namespace coolnum {

int IsoProfile::peak() const
{
    return phi.empty() ? 0 : *std::max_element(phi.begin(), phi.end());
}

NodeSet node_border(const Graph & g, const NodeSet & set)
{
    NodeSet out(g.order());
    for (NodeId v : set.to_vector())
        for (NodeId w : g.neighbors(v))
            if (! set.contains(w))
                out.insert(w);
    return out;
}

IsoProfile iso_profile_exact(const Graph & g, int cap)
{
    const int n = g.order();
    if (n > cap || n > 24)
        throw LimitExceeded("exact isoperimetric profile needs n <= " + std::to_string(std::min(cap, 24)) + ", got "
            + std::to_string(n) + "; use a family-specific profile such as grid_iso_profile");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId w : g.neighbors(v))
            adj[v] |= std::uint32_t{1} << w;

    // reach[S] = S ∪ N(S), built from S minus its lowest bit.
    const std::uint32_t subsets = std::uint32_t{1} << n;
    std::vector<std::uint32_t> reach(subsets, 0);
    IsoProfile profile{n, std::vector<int>(static_cast<std::size_t>(n) + 1, std::numeric_limits<int>::max())};
    profile.phi[0] = 0;
    for (std::uint32_t s = 1; s < subsets; ++s) {
        const int low = std::countr_zero(s);
        reach[s] = reach[s & (s - 1)] | adj[low] | (std::uint32_t{1} << low);
        const int size = std::popcount(s);
        const int border = std::popcount(reach[s] & ~s);
        profile.phi[size] = std::min(profile.phi[size], border);
    }
    return profile;
}

IsoProfile grid_iso_profile(int n)
{
    if (n < 1)
        throw InvalidArgument("grid length must be >= 1, got " + std::to_string(n));
    const Graph g = gen_grid(n);
    const int total = n * n;

    // Simplicial order: by row+col, ties by smaller row.
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(total));
    for (int sum = 2; sum <= 2 * n; ++sum)
        for (int row = std::max(1, sum - n); row <= std::min(n, sum - 1); ++row)
            order.push_back(grid_id(n, {row, sum - row}));

    IsoProfile profile{total, std::vector<int>(static_cast<std::size_t>(total) + 1, 0)};
    std::vector<char> in_set(static_cast<std::size_t>(total), 0);
    std::vector<char> in_border(static_cast<std::size_t>(total), 0);
    int border = 0;
    for (int i = 0; i < total; ++i) {
        const NodeId v = order[i];
        in_set[v] = 1;
        if (in_border[v]) {
            in_border[v] = 0;
            --border;
        }
        for (NodeId w : g.neighbors(v))
            if (! in_set[w] && ! in_border[w]) {
                in_border[w] = 1;
                ++border;
            }
        profile.phi[i + 1] = border;
    }
    return profile;
}

IsoBound iso_upper_bound(const IsoProfile & profile)
{
    IsoBound out;
    if (profile.n == 0)
        return out;
    int x = 1;
    out.trajectory.push_back(x);
    while (x < profile.n) {
        x = x + profile.phi[x] + 1;
        out.trajectory.push_back(x);
    }
    out.rounds = static_cast<int>(out.trajectory.size());
    return out;
}

int BoundsReport::best_lower() const
{
    return std::max(diam_lower, burning_lower.value_or(0));
}

int BoundsReport::best_upper() const
{
    return std::min({order_upper, diam_upper, iso_upper.value_or(std::numeric_limits<int>::max())});
}

BoundsReport bounds_report(const Graph & g, const BoundsOptions & options)
{
    BoundsReport r;
    r.n = g.order();
    r.diameter = diameter(g);
    r.order_upper = (r.n + 2) / 2;
    r.diam_lower = (r.diameter + 3) / 2;
    r.diam_upper = r.diameter + 1;

    if (r.n <= options.iso_cap)
        r.iso_upper = iso_upper_bound(iso_profile_exact(g, options.iso_cap)).rounds;
    else
        r.skipped.push_back("iso_upper");

    if (r.n <= options.burning_cap)
        r.burning_lower = burning_number(g, {options.burning_cap, std::nullopt}).value;
    else
        r.skipped.push_back("burning_lower");
    return r;
}

std::string bounds_to_json(const BoundsReport & r)
{
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["diameter"] = r.diameter;
    doc["order_upper"] = r.order_upper;
    doc["diam_lower"] = r.diam_lower;
    doc["diam_upper"] = r.diam_upper;
    doc["iso_upper"] = r.iso_upper ? nlohmann::ordered_json(*r.iso_upper) : nlohmann::ordered_json(nullptr);
    doc["burning_lower"] = r.burning_lower ? nlohmann::ordered_json(*r.burning_lower) : nlohmann::ordered_json(nullptr);
    doc["skipped"] = r.skipped;
    return doc.dump() + "\n";
}

} // namespace coolnum
