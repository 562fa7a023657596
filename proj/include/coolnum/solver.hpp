#pragma once

#include "coolnum/cooling.hpp"
#include "coolnum/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace coolnum {

/// Hard ceiling on graph order for the bitmask search.
inline constexpr int solver_hard_cap = 64;

struct SearchLimits {
    int max_nodes = 20;
    std::optional<std::chrono::milliseconds> time_budget;

    static SearchLimits cooling_defaults() { return {20, std::nullopt}; }
    static SearchLimits burning_defaults() { return {24, std::nullopt}; }
};

struct SolverOptions {
    bool prune = true;
    bool memoize = true;
    /// Worker threads for the first-source branches; 1 runs inline.
    int jobs = 1;
    /// Only try node 0 as the first source. Valid only for vertex-transitive graphs.
    bool vertex_transitive = false;
};

struct SearchStats {
    std::uint64_t expanded = 0;
    std::uint64_t memo_hits = 0;
    std::chrono::microseconds wall{0};
};

struct SearchResult {
    /// Rounds (cooling number, burning number) or sources (maximum sequence length).
    int value = 0;
    CoolingTrace witness;
    SearchStats stats;
};

/// Exact cooling number: the maximum number of rounds over all source choices.
SearchResult cooling_number(const Graph & g, const SearchLimits & limits = SearchLimits::cooling_defaults(),
    const SolverOptions & options = {});

/// Maximum number of sources in any cooling run.
SearchResult max_sequence_length(const Graph & g, const SearchLimits & limits = SearchLimits::cooling_defaults(),
    const SolverOptions & options = {});

/// Exact burning number: the minimum number of rounds over all source choices.
SearchResult burning_number(const Graph & g, const SearchLimits & limits = SearchLimits::burning_defaults());

/// Upper bound on the rounds still needed once `uncooled` nodes remain after a
/// source selection: every further round except the last cools at least two.
constexpr int remaining_rounds_bound(int uncooled) noexcept { return (uncooled + 1) / 2; }

/// Default cap, overridable through the COOLNUM_MAX_NODES environment variable.
int default_max_nodes(int fallback);

} // namespace coolnum
