#pragma once

#include "coolnum/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coolnum {

/// Exact node-isoperimetric profile: phi[s] is the minimum border size over
/// all s-node subsets. Indexed 0..n with phi[0] = 0 and phi[n] = 0.
struct IsoProfile {
    int n = 0;
    std::vector<int> phi;

    /// Isoperimetric peak, the maximum of phi.
    int peak() const;
};

/// Nodes outside `set` adjacent to some node of `set`.
NodeSet node_border(const Graph & g, const NodeSet & set);

inline constexpr int iso_default_cap = 16;

/// Enumerates all 2^n subsets. Throws LimitExceeded when n exceeds `cap`.
IsoProfile iso_profile_exact(const Graph & g, int cap = iso_default_cap);

/// Profile of the n x n grid from border sizes of simplicial-order prefixes.
IsoProfile grid_iso_profile(int n);

struct IsoBound {
    int rounds = 0;
    /// x_1 = 1, x_{i+1} = x_i + phi[x_i] + 1, stopping at the first x_I >= n.
    std::vector<int> trajectory;
};

/// Upper bound on the cooling number from a node-isoperimetric profile.
IsoBound iso_upper_bound(const IsoProfile & profile);

struct BoundsOptions {
    int iso_cap = iso_default_cap;
    /// Largest order for which the exact burning number is included.
    int burning_cap = 16;
};

struct BoundsReport {
    int n = 0;
    int diameter = 0;
    int order_upper = 0;
    int diam_lower = 0;
    int diam_upper = 0;
    std::optional<int> iso_upper;
    std::optional<int> burning_lower;
    std::vector<std::string> skipped;

    int best_lower() const;
    int best_upper() const;
};

/// Throws Disconnected for a disconnected graph.
BoundsReport bounds_report(const Graph & g, const BoundsOptions & options = {});

std::string bounds_to_json(const BoundsReport & report);

} // namespace coolnum
