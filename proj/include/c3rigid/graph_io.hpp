#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "c3rigid/graph.hpp"

namespace c3rigid {

/// Parses {"vertices": n, "edges": [[u,v],...], "c3": [...]} ("c3" optional).
/// Throws SchemaError for malformed documents and the graph/action
/// validation errors otherwise.
SymGraph parse_graph(std::string_view document);
SymGraph graph_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const SymGraph& sg);
std::string serialize(const SymGraph& sg);

nlohmann::json to_json(const Edge& e);
nlohmann::json edges_to_json(std::span<const Edge> edges);

}  // namespace c3rigid
