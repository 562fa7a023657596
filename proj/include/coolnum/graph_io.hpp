#pragma once

#include "coolnum/graph.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace coolnum {

/// Parses {"n": int, "edges": [[u, v], ...]}. Duplicate edges are removed and
/// reported through `warnings` when given.
Graph parse_graph_json(const std::string & text, std::vector<std::string> * warnings = nullptr);
std::string graph_to_json(const Graph & g);

Graph read_graph(const std::filesystem::path & path, std::vector<std::string> * warnings = nullptr);
void write_graph(const Graph & g, const std::filesystem::path & path);

struct DotOptions {
    /// When set, the graph is an n x n grid and nodes get "pos" attributes.
    std::optional<int> grid_length;
};

std::string graph_to_dot(const Graph & g, const DotOptions & options = {});
void export_dot(const Graph & g, const std::filesystem::path & path, const DotOptions & options = {});

} // namespace coolnum
