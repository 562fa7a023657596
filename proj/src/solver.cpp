#include "coolnum/solver.hpp"

#include "coolnum/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

namespace coolnum {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

enum class Objective { rounds, sources };

class Deadline {
public:
    explicit Deadline(std::optional<std::chrono::milliseconds> budget) :
        budget_(budget), end_(budget ? Clock::now() + *budget : Clock::time_point::max())
    {
    }

    void check() const
    {
        if (budget_ && Clock::now() > end_)
            throw LimitExceeded("time budget of " + std::to_string(budget_->count()) + " ms exhausted");
    }

private:
    std::optional<std::chrono::milliseconds> budget_;
    Clock::time_point end_;
};

/// Bitmask view of a graph shared by the searches.
class MaskGraph {
public:
    explicit MaskGraph(const Graph & g) : n_(g.order()), full_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1), adj_(g.order(), 0)
    {
        for (NodeId v = 0; v < n_; ++v)
            for (NodeId w : g.neighbors(v))
                adj_[v] |= Mask{1} << w;
    }

    int order() const noexcept { return n_; }
    Mask full() const noexcept { return full_; }

    Mask spread(Mask s) const noexcept
    {
        Mask out = s;
        for (Mask rest = s; rest; rest &= rest - 1)
            out |= adj_[std::countr_zero(rest)];
        return out;
    }

    /// Spread steps needed to cover the graph from s (s nonempty).
    int steps_to_cover(Mask s) const noexcept
    {
        int steps = 0;
        while (s != full_) {
            Mask next = s;
            for (Mask rest = s; rest; rest &= rest - 1)
                next |= adj_[std::countr_zero(rest)];
            s = next;
            ++steps;
        }
        return steps;
    }

private:
    int n_;
    Mask full_;
    std::vector<Mask> adj_;
};

/// Depth-first maximization over cooled sets at round boundaries.
///
/// value(s) is the best objective obtainable from the state right after a
/// source selection left the cooled set s. It depends only on s, which is
/// what makes the memo sound.
class MaxSearch {
public:
    MaxSearch(const MaskGraph & g, Objective objective, const SolverOptions & options, const Deadline & deadline) :
        g_(g), objective_(objective), options_(options), deadline_(deadline)
    {
    }

    int upper(Mask s) const noexcept
    {
        const int uncooled = std::popcount(g_.full() & ~s);
        return std::min(remaining_rounds_bound(uncooled), g_.steps_to_cover(s));
    }

    int value(Mask s)
    {
        if (s == g_.full())
            return 0;
        if ((++stats_.expanded & 1023) == 0)
            deadline_.check();

        if (options_.memoize) {
            if (auto it = memo_.find(s); it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }

        int result;
        const Mask after_spread = g_.spread(s);
        if (after_spread == g_.full()) {
            result = objective_ == Objective::rounds ? 1 : 0;
        }
        else {
            const int cap = options_.prune ? upper(s) : std::numeric_limits<int>::max();
            int best = -1;
            for (Mask rest = g_.full() & ~after_spread; rest; rest &= rest - 1) {
                const Mask child = after_spread | (Mask{1} << std::countr_zero(rest));
                if (options_.prune && best >= 0 && 1 + upper(child) <= best)
                    continue;
                best = std::max(best, 1 + value(child));
                if (best >= cap)
                    break;
            }
            result = best;
        }

        if (options_.memoize)
            memo_.emplace(s, static_cast<std::int8_t>(result));
        return result;
    }

    /// Sources of an optimal run continuing from s, lowest id among ties.
    void extend_witness(Mask s, std::vector<NodeId> & sources)
    {
        while (s != g_.full()) {
            const int target = value(s);
            const Mask after_spread = g_.spread(s);
            if (after_spread == g_.full())
                return;
            bool found = false;
            for (Mask rest = g_.full() & ~after_spread; rest; rest &= rest - 1) {
                const NodeId v = std::countr_zero(rest);
                const Mask child = after_spread | (Mask{1} << v);
                if (1 + value(child) == target) {
                    sources.push_back(v);
                    s = child;
                    found = true;
                    break;
                }
            }
            if (! found)
                throw Error("internal: witness reconstruction lost the optimum");
        }
    }

    const SearchStats & stats() const noexcept { return stats_; }

private:
    const MaskGraph & g_;
    Objective objective_;
    SolverOptions options_;
    const Deadline & deadline_;
    std::unordered_map<Mask, std::int8_t> memo_;
    SearchStats stats_;
};

void check_limits(const Graph & g, const SearchLimits & limits)
{
    require_connected(g);
    const int cap = std::min(limits.max_nodes, solver_hard_cap);
    if (g.order() > cap)
        throw LimitExceeded("graph has " + std::to_string(g.order()) + " nodes; solver cap is " + std::to_string(cap));
}

void accumulate(SearchStats & into, const SearchStats & from)
{
    into.expanded += from.expanded;
    into.memo_hits += from.memo_hits;
}

SearchResult maximize(const Graph & g, Objective objective, const SearchLimits & limits, const SolverOptions & options)
{
    const auto start = Clock::now();
    check_limits(g, limits);
    const MaskGraph mg(g);
    const Deadline deadline(limits.time_budget);
    const int n = g.order();

    // Root: round 1 selects a source with nothing to spread.
    std::vector<NodeId> roots;
    if (options.vertex_transitive)
        roots.push_back(0);
    else
        for (NodeId v = 0; v < n; ++v)
            roots.push_back(v);

    // Whole-run bounds: ceil((n+1)/2) rounds and diam+1 rounds.
    const int root_cap = options.prune ? std::min(n / 2 + 1, diameter(g) + 1) : std::numeric_limits<int>::max();

    SearchResult result;

    std::mutex lock;
    int best = -1;
    NodeId best_root = -1;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&]() {
        MaxSearch search(mg, objective, options, deadline);
        try {
            for (std::size_t i = next++; i < roots.size(); i = next++) {
                const NodeId v = roots[i];
                const Mask child = Mask{1} << v;
                {
                    std::lock_guard guard(lock);
                    if (options.prune && best >= 0) {
                        const int bound = std::min(1 + search.upper(child), root_cap);
                        if (bound < best || (bound == best && v > best_root))
                            continue;
                    }
                }
                const int val = 1 + search.value(child);
                std::lock_guard guard(lock);
                if (val > best || (val == best && v < best_root)) {
                    best = val;
                    best_root = v;
                }
            }
        }
        catch (...) {
            std::lock_guard guard(lock);
            if (! failure)
                failure = std::current_exception();
        }
        std::lock_guard guard(lock);
        accumulate(result.stats, search.stats());
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(roots.size())));
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    MaxSearch replay(mg, objective, options, deadline);
    std::vector<NodeId> sources{best_root};
    replay.extend_witness(Mask{1} << best_root, sources);
    accumulate(result.stats, replay.stats());

    result.value = best;
    result.witness = validate_sequence(g, sources);
    const int replayed = objective == Objective::rounds ? result.witness.round_count() : result.witness.source_count();
    if (replayed != best)
        throw Error("internal: witness replay gives " + std::to_string(replayed) + ", search gave " + std::to_string(best));
    result.stats.wall = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return result;
}

/// Depth-limited feasibility for burning: can every node be burned within
/// `rounds` more rounds from the post-selection state s?
class BurnSearch {
public:
    BurnSearch(const MaskGraph & g, const Deadline & deadline) : g_(g), deadline_(deadline) {}

    bool feasible(Mask s, int rounds, std::vector<NodeId> & sources)
    {
        if (s == g_.full())
            return true;
        if (rounds == 0)
            return false;
        if ((++stats_.expanded & 1023) == 0)
            deadline_.check();
        if (auto it = failed_.find(s); it != failed_.end() && rounds <= it->second) {
            ++stats_.memo_hits;
            return false;
        }
        if (g_.steps_to_cover(s) <= rounds)
            return true;

        // The round's own source counts: with one round left, a single
        // node missed by the spread can still be chosen.
        const Mask after_spread = g_.spread(s);
        for (Mask rest = g_.full() & ~after_spread; rest; rest &= rest - 1) {
            const NodeId v = std::countr_zero(rest);
            sources.push_back(v);
            if (feasible(after_spread | (Mask{1} << v), rounds - 1, sources))
                return true;
            sources.pop_back();
        }
        auto & worst = failed_[s];
        worst = std::max(worst, rounds);
        return false;
    }

    const SearchStats & stats() const noexcept { return stats_; }

private:
    const MaskGraph & g_;
    const Deadline & deadline_;
    std::unordered_map<Mask, int> failed_;
    SearchStats stats_;
};

} // namespace

SearchResult cooling_number(const Graph & g, const SearchLimits & limits, const SolverOptions & options)
{
    return maximize(g, Objective::rounds, limits, options);
}

SearchResult max_sequence_length(const Graph & g, const SearchLimits & limits, const SolverOptions & options)
{
    return maximize(g, Objective::sources, limits, options);
}

SearchResult burning_number(const Graph & g, const SearchLimits & limits)
{
    const auto start = Clock::now();
    check_limits(g, limits);
    const MaskGraph mg(g);
    const Deadline deadline(limits.time_budget);
    BurnSearch search(mg, deadline);

    // Iterative deepening on the total round count.
    for (int k = 1;; ++k) {
        for (NodeId v = 0; v < g.order(); ++v) {
            std::vector<NodeId> sources{v};
            if (search.feasible(Mask{1} << v, k - 1, sources)) {
                SearchResult result;
                result.value = k;
                SequencePolicy policy(sources);
                result.witness = run_burning(g, policy);
                if (result.witness.round_count() != k)
                    throw Error("internal: burning witness replays to " + std::to_string(result.witness.round_count())
                        + " rounds, expected " + std::to_string(k));
                result.stats = search.stats();
                result.stats.wall = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
                return result;
            }
        }
    }
}

int default_max_nodes(int fallback)
{
    if (const char * env = std::getenv("COOLNUM_MAX_NODES")) {
        try {
            return std::stoi(env);
        }
        catch (const std::exception &) {
            throw InvalidArgument(std::string("COOLNUM_MAX_NODES must be an integer, got \"") + env + "\"");
        }
    }
    return fallback;
}

} // namespace coolnum
