#include "c3rigid/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "c3rigid/error.hpp"
#include "c3rigid/graph_io.hpp"

namespace c3rigid {

using nlohmann::json;

std::string input_digest(std::string_view document) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : document) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_header(std::string_view command, std::string_view document) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["input_digest"] = input_digest(document);
    return j;
}

json to_json(const QSqrt3& x) {
    return {{"a", rational_string(x.rational_part())},
            {"b", rational_string(x.sqrt3_part())},
            {"approx", x.to_double()}};
}

QSqrt3 qsqrt3_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() || !j["b"].is_string())
        throw Error(ErrorCode::SchemaError, "field element needs string fields a and b");
    return {parse_rational(j["a"].get<std::string>()), parse_rational(j["b"].get<std::string>())};
}

json to_json(const Point2& p) { return {{"x", to_json(p.x())}, {"y", to_json(p.y())}}; }

json points_to_json(std::span<const Point2> points) {
    json out = json::array();
    for (const Point2& p : points) out.push_back(to_json(p));
    return out;
}

json to_json(const SparsityReport& r) {
    json j{{"is_sparse", r.is_sparse}, {"is_tight", r.is_tight}, {"edge_count", r.edge_count}, {"target", r.target}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return j;
}

json to_json(const FixedCounts& c) { return {{"joints", c.joints}, {"bars", c.bars}}; }

json to_json(const C3Verdict& v) {
    json reasons = json::array();
    for (FailedCondition r : v.reasons) reasons.push_back(to_string(r));
    json j{{"isostatic", v.isostatic}, {"reasons", reasons}, {"sparsity", to_json(v.sparsity)},
           {"fixed", to_json(v.fixed)}};
    j["witness_subgraph"] = v.witness_subgraph ? json(*v.witness_subgraph) : json(nullptr);
    j["witness_fixed_vertex"] = v.witness_fixed_vertex ? json(*v.witness_fixed_vertex) : json(nullptr);
    return j;
}

json to_json(const Move& m) {
    return {{"kind", to_string(m.kind)}, {"anchors", m.anchors}, {"new", m.new_vertices}};
}

Move move_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("anchors") || !j.contains("new"))
        throw Error(ErrorCode::SchemaError, "move needs kind, anchors and new");
    try {
        Move m;
        m.kind = move_kind_from_string(j["kind"].get<std::string>());
        m.anchors = j["anchors"].get<std::vector<Vertex>>();
        m.new_vertices = j["new"].get<std::array<Vertex, 3>>();
        return m;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
}

json to_json(const ConstructionSequence& seq) {
    json moves = json::array();
    for (const Move& m : seq.moves) moves.push_back(to_json(m));
    return {{"base", to_json(seq.base)}, {"moves", moves}, {"relabel", seq.relabel}};
}

json to_json(const ReplayResult& r) {
    json trace = json::array();
    for (const ReplayStep& s : r.trace)
        trace.push_back(
            {{"vertices", s.vertices}, {"edges", s.edges}, {"tight", s.tight}, {"fixed_joints", s.fixed_joints}});
    return {{"graph", to_json(r.graph)}, {"trace", trace}};
}

json to_json(const TreePartition& tp) {
    json j;
    for (int i = 0; i < 3; ++i) j["T" + std::to_string(i)] = edges_to_json(tp.trees[i]);
    return j;
}

TreePartition partition_from_json(const json& j) {
    TreePartition tp;
    try {
        for (int i = 0; i < 3; ++i) {
            for (const auto& e : j.at("T" + std::to_string(i))) {
                const auto uv = e.get<std::array<Vertex, 2>>();
                tp.trees[i].emplace_back(uv[0], uv[1]);
            }
            std::sort(tp.trees[i].begin(), tp.trees[i].end());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    return tp;
}

json to_json(const PartitionReport& r) {
    json checks = json::array();
    for (const PartitionCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

json to_json(const Placement& p) {
    return {{"positions", points_to_json(p.positions)}, {"framework", p.framework}};
}

json to_json(const IsostaticVerdict& v) {
    return {{"isostatic", v.isostatic}, {"independent", v.independent}, {"rank", v.rank},
            {"edge_count", v.edge_count}, {"target", v.target}, {"flex_dimension", v.flex_dimension}};
}

json to_json(const Frame& f) {
    return {{"positions", points_to_json(f.positions)}, {"directions", points_to_json(f.directions)}};
}

json to_json(const PullApartRound& r) {
    return {{"component", r.choice.component},
            {"component_tree", r.choice.component_tree},
            {"direction_tree", r.choice.direction_tree},
            {"t", rational_string(r.t)},
            {"attempts", r.attempts},
            {"rank", r.rank},
            {"coincident_before", r.coincident_before},
            {"coincident_after", r.coincident_after}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace c3rigid
