#pragma once

#include "coolnum/graph.hpp"

#include <functional>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coolnum {

/// One round of a cooling (or burning) run: propagation first, then the
/// round's source if an uncooled node was left to choose.
struct RoundRecord {
    int round = 0;
    /// Nodes cooled by propagation this round, ascending. Empty in round 1.
    std::vector<NodeId> spread;
    std::optional<NodeId> source;

    friend bool operator==(const RoundRecord &, const RoundRecord &) = default;
};

struct CoolingTrace {
    std::vector<RoundRecord> rounds;
    NodeSet final_cooled;

    /// The cooling number counts rounds, not sources.
    int round_count() const noexcept { return static_cast<int>(rounds.size()); }
    std::vector<NodeId> sources() const;
    int source_count() const noexcept;

    /// Round in which each node became cooled.
    std::vector<int> cooled_round() const;

    friend bool operator==(const CoolingTrace &, const CoolingTrace &) = default;
};

/// Decides the source of a round given the cooled set after propagation.
/// Must return an uncooled node and behave deterministically.
class SourcePolicy {
public:
    virtual ~SourcePolicy() = default;
    virtual NodeId choose(const Graph & g, const NodeSet & cooled, int round) = 0;
};

/// Always the smallest-id uncooled node.
class SmallestIdPolicy : public SourcePolicy {
public:
    NodeId choose(const Graph & g, const NodeSet & cooled, int round) override;
};

class FunctionPolicy : public SourcePolicy {
public:
    using Fn = std::function<NodeId(const Graph &, const NodeSet &, int)>;
    explicit FunctionPolicy(Fn fn) : fn_(std::move(fn)) {}
    NodeId choose(const Graph & g, const NodeSet & cooled, int round) override { return fn_(g, cooled, round); }

private:
    Fn fn_;
};

/// Plays a fixed sequence, then falls back to the smallest-id uncooled node.
/// Throws InvalidSequence if a listed node is already cooled when its turn comes.
class SequencePolicy : public SourcePolicy {
public:
    explicit SequencePolicy(std::vector<NodeId> sequence) : sequence_(std::move(sequence)) {}
    NodeId choose(const Graph & g, const NodeSet & cooled, int round) override;
    std::size_t consumed() const noexcept { return next_; }

private:
    std::vector<NodeId> sequence_;
    std::size_t next_ = 0;
};

/// Returns cooled ∪ N(cooled).
NodeSet spread_step(const Graph & g, const NodeSet & cooled);

/// Runs the cooling process to completion. Round 1 only selects a source;
/// every later round spreads from the nodes cooled by the end of the previous
/// round and then selects a source if one is available. Selection is mandatory.
CoolingTrace run_cooling(const Graph & g, SourcePolicy & policy);

/// Burning has the same round structure; the difference is only in what the
/// selector optimizes, so the trace is identical for a given policy.
CoolingTrace run_burning(const Graph & g, SourcePolicy & policy);

/// Plays `sequence` as the sources of rounds 1, 2, ... and extends it with the
/// smallest uncooled node once it runs out. Throws InvalidSequence naming the
/// element and round if a listed node is already cooled at its selection
/// point, or if the process ends before the sequence is used up.
CoolingTrace validate_sequence(const Graph & g, std::span<const NodeId> sequence);

inline CoolingTrace validate_sequence(const Graph & g, std::initializer_list<NodeId> sequence)
{
    return validate_sequence(g, std::span<const NodeId>(sequence.begin(), sequence.size()));
}

/// {"rounds": [{"round": t, "spread": [...], "source": id-or-null}, ...]}
std::string trace_to_json(const CoolingTrace & trace);
CoolingTrace parse_trace_json(const std::string & text);
void write_trace(const CoolingTrace & trace, const std::filesystem::path & path);
CoolingTrace read_trace(const std::filesystem::path & path);

} // namespace coolnum
