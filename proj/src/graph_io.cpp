#include "c3rigid/graph_io.hpp"

#include "c3rigid/error.hpp"

namespace c3rigid {

namespace {

int as_index(const nlohmann::json& value, const char* what) {
    if (!value.is_number_integer()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be an integer");
    const auto x = value.get<long long>();
    if (x < 0 || x > 100'000'000) throw Error(ErrorCode::SchemaError, std::string(what) + " out of range");
    return static_cast<int>(x);
}

}  // namespace

SymGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "document must be a JSON object");
    if (!doc.contains("vertices")) throw Error(ErrorCode::SchemaError, "missing \"vertices\"");
    if (!doc.contains("edges")) throw Error(ErrorCode::SchemaError, "missing \"edges\"");
    const int n = as_index(doc.at("vertices"), "\"vertices\"");

    const auto& jedges = doc.at("edges");
    if (!jedges.is_array()) throw Error(ErrorCode::SchemaError, "\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(jedges.size());
    for (const auto& pair : jedges) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::SchemaError, "each edge must be a pair");
        const int u = as_index(pair[0], "edge endpoint");
        const int v = as_index(pair[1], "edge endpoint");
        if (u >= n || v >= n) throw Error(ErrorCode::SchemaError, "edge endpoint exceeds vertex count");
        if (u == v) throw Error(ErrorCode::LoopOrDuplicateEdge, "loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    Graph graph(n, std::move(edges));

    if (!doc.contains("c3") || doc.at("c3").is_null()) return SymGraph(std::move(graph));
    const auto& jc3 = doc.at("c3");
    if (!jc3.is_array()) throw Error(ErrorCode::SchemaError, "\"c3\" must be an array");
    std::vector<Vertex> gamma;
    gamma.reserve(jc3.size());
    for (const auto& x : jc3) gamma.push_back(as_index(x, "c3 entry"));
    if (static_cast<int>(gamma.size()) != n)
        throw Error(ErrorCode::NotAPermutation, "\"c3\" must have exactly \"vertices\" entries");
    return SymGraph(std::move(graph), C3Action(std::move(gamma)));
}

SymGraph parse_graph(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    return graph_from_json(doc);
}

nlohmann::json to_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

nlohmann::json edges_to_json(std::span<const Edge> edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const Edge& e : edges) out.push_back(to_json(e));
    return out;
}

nlohmann::json to_json(const SymGraph& sg) {
    nlohmann::json doc;
    doc["vertices"] = sg.graph().vertex_count();
    doc["edges"] = edges_to_json(sg.graph().edges());
    if (sg.has_action()) {
        auto line = sg.action().one_line();
        doc["c3"] = std::vector<Vertex>(line.begin(), line.end());
    }
    return doc;
}

std::string serialize(const SymGraph& sg) { return to_json(sg).dump(); }

}  // namespace c3rigid
