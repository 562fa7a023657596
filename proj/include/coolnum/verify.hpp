#pragma once

#include "coolnum/error.hpp"
#include "coolnum/graph.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace coolnum {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Connected graphs of order at most 12: every generated family plus small
/// ILT graphs and seeded random connected graphs.
const std::vector<NamedGraph> & standard_corpus();

struct SuiteReport {
    std::string name;
    std::string claim;
    int instances = 0;
    int failures = 0;
    /// One entry per failed instance.
    std::vector<std::string> messages;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures == 0 && instances > 0; }
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

const std::vector<std::string> & suite_names();

/// Runs one verification suite. Throws UnknownSuite for an unrecognized name.
SuiteReport run_suite(const std::string & name);

} // namespace coolnum
