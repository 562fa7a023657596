#include "coolnum/graph_io.hpp"

#include "coolnum/error.hpp"
#include "coolnum/generators.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace coolnum {

namespace {

std::string slurp(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::filesystem::path & path, const std::string & text)
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path.string());
    out << text;
}

} // namespace

Graph parse_graph_json(const std::string & text, std::vector<std::string> * warnings)
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
        throw ParseError("graph file must be an object with \"n\" and \"edges\"");
    if (! doc["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer");
    if (! doc["edges"].is_array())
        throw ParseError("\"edges\" must be an array");

    const int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto & e : doc["edges"]) {
        if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers, got " + e.dump());
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    Graph g = build_graph(n, edges);

    if (warnings) {
        std::vector<Edge> normalized;
        for (auto [u, v] : edges)
            normalized.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(normalized.begin(), normalized.end());
        for (std::size_t i = 1; i < normalized.size(); ++i)
            if (normalized[i] == normalized[i - 1] && (i == 1 || normalized[i] != normalized[i - 2]))
                warnings->push_back("duplicate edge (" + std::to_string(normalized[i].first) + ","
                    + std::to_string(normalized[i].second) + ") removed");
    }
    return g;
}

std::string graph_to_json(const Graph & g)
{
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    doc["edges"] = json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back({u, v});
    return doc.dump() + "\n";
}

Graph read_graph(const std::filesystem::path & path, std::vector<std::string> * warnings)
{
    return parse_graph_json(slurp(path), warnings);
}

void write_graph(const Graph & g, const std::filesystem::path & path)
{
    spill(path, graph_to_json(g));
}

std::string graph_to_dot(const Graph & g, const DotOptions & options)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (NodeId v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=\"" << v << "\"";
        if (options.grid_length) {
            auto c = grid_coord(*options.grid_length, v);
            out << ", pos=\"" << c.col << "," << -c.row << "!\"";
        }
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

void export_dot(const Graph & g, const std::filesystem::path & path, const DotOptions & options)
{
    spill(path, graph_to_dot(g, options));
}

} // namespace coolnum
