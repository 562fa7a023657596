#include "coolnum/cooling.hpp"

#include "coolnum/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coolnum {

std::vector<NodeId> CoolingTrace::sources() const
{
    std::vector<NodeId> out;
    for (const auto & r : rounds)
        if (r.source)
            out.push_back(*r.source);
    return out;
}

int CoolingTrace::source_count() const noexcept
{
    return static_cast<int>(std::count_if(rounds.begin(), rounds.end(), [](const RoundRecord & r) { return r.source.has_value(); }));
}

std::vector<int> CoolingTrace::cooled_round() const
{
    std::vector<int> when(static_cast<std::size_t>(final_cooled.universe()), 0);
    for (const auto & r : rounds) {
        for (NodeId v : r.spread)
            when[v] = r.round;
        if (r.source)
            when[*r.source] = r.round;
    }
    return when;
}

NodeId SmallestIdPolicy::choose(const Graph & g, const NodeSet & cooled, int)
{
    for (NodeId v = 0; v < g.order(); ++v)
        if (! cooled.contains(v))
            return v;
    return -1;
}

NodeId SequencePolicy::choose(const Graph & g, const NodeSet & cooled, int round)
{
    if (next_ < sequence_.size()) {
        NodeId v = sequence_[next_];
        if (v < 0 || v >= g.order())
            throw InvalidSequence("sequence element " + std::to_string(v) + " at round " + std::to_string(round)
                    + " is not a node",
                round, v);
        if (cooled.contains(v))
            throw InvalidSequence("sequence element " + std::to_string(v) + " is already cooled at round "
                    + std::to_string(round),
                round, v);
        ++next_;
        return v;
    }
    return SmallestIdPolicy{}.choose(g, cooled, round);
}

NodeSet spread_step(const Graph & g, const NodeSet & cooled)
{
    return closed_neighborhood(g, cooled);
}

namespace {

CoolingTrace run_process(const Graph & g, SourcePolicy & policy)
{
    require_connected(g);
    const int n = g.order();

    CoolingTrace trace;
    NodeSet cooled(n);
    int cooled_count = 0;
    // Nodes cooled in the previous round; older nodes have no uncooled neighbors left.
    std::vector<NodeId> fresh;

    for (int round = 1;; ++round) {
        RoundRecord rec;
        rec.round = round;

        if (round > 1) {
            for (NodeId v : fresh)
                for (NodeId w : g.neighbors(v))
                    if (cooled.insert(w))
                        rec.spread.push_back(w);
            std::sort(rec.spread.begin(), rec.spread.end());
            cooled_count += static_cast<int>(rec.spread.size());
        }
        fresh = rec.spread;

        if (cooled_count < n) {
            NodeId s = policy.choose(g, cooled, round);
            if (s < 0 || s >= n)
                throw InvalidSequence("policy chose node " + std::to_string(s) + " outside 0.." + std::to_string(n - 1)
                        + " at round " + std::to_string(round),
                    round, s);
            if (cooled.contains(s))
                throw InvalidSequence("policy chose already cooled node " + std::to_string(s) + " at round "
                        + std::to_string(round),
                    round, s);
            cooled.insert(s);
            ++cooled_count;
            fresh.push_back(s);
            rec.source = s;
        }

        trace.rounds.push_back(std::move(rec));
        if (cooled_count == n)
            break;
    }
    trace.final_cooled = std::move(cooled);
    return trace;
}

} // namespace

CoolingTrace run_cooling(const Graph & g, SourcePolicy & policy)
{
    return run_process(g, policy);
}

CoolingTrace run_burning(const Graph & g, SourcePolicy & policy)
{
    return run_process(g, policy);
}

CoolingTrace validate_sequence(const Graph & g, std::span<const NodeId> sequence)
{
    SequencePolicy policy({sequence.begin(), sequence.end()});
    CoolingTrace trace = run_cooling(g, policy);
    if (policy.consumed() < sequence.size()) {
        NodeId v = sequence[policy.consumed()];
        int round = trace.round_count() + 1;
        throw InvalidSequence("sequence element " + std::to_string(v) + " has no selection point: every node is cooled by round "
                + std::to_string(trace.round_count()),
            round, v);
    }
    return trace;
}

std::string trace_to_json(const CoolingTrace & trace)
{
    nlohmann::ordered_json doc;
    doc["rounds"] = nlohmann::ordered_json::array();
    for (const auto & r : trace.rounds) {
        nlohmann::ordered_json rec;
        rec["round"] = r.round;
        rec["spread"] = r.spread;
        if (r.source)
            rec["source"] = *r.source;
        else
            rec["source"] = nullptr;
        doc["rounds"].push_back(std::move(rec));
    }
    return doc.dump() + "\n";
}

CoolingTrace parse_trace_json(const std::string & text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("trace file is not valid JSON: ") + e.what());
    }
    if (! doc.is_object() || ! doc.contains("rounds") || ! doc["rounds"].is_array())
        throw ParseError("trace file must be an object with a \"rounds\" array");

    CoolingTrace trace;
    NodeId top = -1;
    try {
        for (const auto & r : doc["rounds"]) {
            RoundRecord rec;
            rec.round = r.at("round").get<int>();
            rec.spread = r.at("spread").get<std::vector<NodeId>>();
            if (! r.at("source").is_null())
                rec.source = r.at("source").get<NodeId>();
            for (NodeId v : rec.spread)
                top = std::max(top, v);
            if (rec.source)
                top = std::max(top, *rec.source);
            trace.rounds.push_back(std::move(rec));
        }
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(std::string("malformed trace record: ") + e.what());
    }
    trace.final_cooled = NodeSet(top + 1);
    for (const auto & r : trace.rounds) {
        for (NodeId v : r.spread)
            trace.final_cooled.insert(v);
        if (r.source)
            trace.final_cooled.insert(*r.source);
    }
    return trace;
}

void write_trace(const CoolingTrace & trace, const std::filesystem::path & path)
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path.string());
    out << trace_to_json(trace);
}

CoolingTrace read_trace(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_trace_json(buf.str());
}

} // namespace coolnum
