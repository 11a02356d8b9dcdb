#include "c3rigid/moves.hpp"

#include <algorithm>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::VertexAddition: return "VertexAddition";
        case MoveKind::EdgeSplit: return "EdgeSplit";
        case MoveKind::DeltaExtension: return "DeltaExtension";
    }
    return "Unknown";
}

MoveKind move_kind_from_string(std::string_view name) {
    for (MoveKind k : {MoveKind::VertexAddition, MoveKind::EdgeSplit, MoveKind::DeltaExtension})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::SchemaError, "unknown move kind " + std::string(name));
}

namespace {

void check_anchor(const SymGraph& sg, Vertex a) {
    if (a < 0 || a >= sg.graph().vertex_count())
        throw Error(ErrorCode::InvalidAnchor, "anchor " + std::to_string(a) + " is not a vertex");
}

// Builds the extended graph: old edges minus `removed`, plus `added`; gamma
// gains the 3-cycle (n n+1 n+2).
SymGraph extend(const SymGraph& sg, const std::vector<Edge>& removed, std::vector<Edge> added) {
    const Graph& g = sg.graph();
    const int n = g.vertex_count();

    std::vector<Edge> edges;
    edges.reserve(g.edges().size() + added.size());
    for (const Edge& e : g.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);

    std::sort(added.begin(), added.end());
    if (std::adjacent_find(added.begin(), added.end()) != added.end())
        throw Error(ErrorCode::DegenerateMove, "new edges collide");
    edges.insert(edges.end(), added.begin(), added.end());

    const auto line = sg.action().one_line();
    std::vector<Vertex> gamma(line.begin(), line.end());
    gamma.insert(gamma.end(), {n + 1, n + 2, n});
    return SymGraph(Graph(n + 3, std::move(edges)), C3Action(std::move(gamma)));
}

}  // namespace

SymGraph apply_vertex_addition(const SymGraph& sg, Vertex v1, Vertex v2) {
    require_c3(sg);
    check_anchor(sg, v1);
    check_anchor(sg, v2);
    if (v1 == v2) throw Error(ErrorCode::InvalidAnchor, "vertex addition needs two distinct anchors");
    const C3Action& gamma = sg.action();
    const int n = sg.graph().vertex_count();
    std::vector<Edge> added;
    for (int k = 0; k < 3; ++k) {
        added.emplace_back(n + k, gamma.power(v1, k));
        added.emplace_back(n + k, gamma.power(v2, k));
    }
    return extend(sg, {}, std::move(added));
}

SymGraph apply_edge_split(const SymGraph& sg, Vertex v1, Vertex v2, Vertex v3) {
    require_c3(sg);
    check_anchor(sg, v1);
    check_anchor(sg, v2);
    check_anchor(sg, v3);
    if (v1 == v2 || v3 == v1 || v3 == v2)
        throw Error(ErrorCode::InvalidAnchor, "edge split needs three distinct anchors");
    if (!sg.graph().has_edge(v1, v2))
        throw Error(ErrorCode::MissingEdge,
                    "{" + std::to_string(v1) + "," + std::to_string(v2) + "} is not an edge");
    const C3Action& gamma = sg.action();
    std::vector<Edge> removed = edge_orbit(gamma, Edge(v1, v2));
    if (removed.size() < 3) throw Error(ErrorCode::DegenerateMove, "split edge is fixed by gamma");

    const int n = sg.graph().vertex_count();
    std::vector<Edge> added;
    for (int k = 0; k < 3; ++k)
        for (Vertex a : {v1, v2, v3}) added.emplace_back(n + k, gamma.power(a, k));
    return extend(sg, removed, std::move(added));
}

SymGraph apply_delta_extension(const SymGraph& sg, Vertex v0) {
    require_c3(sg);
    check_anchor(sg, v0);
    const C3Action& gamma = sg.action();
    if (gamma.fixes(v0)) throw Error(ErrorCode::FixedAnchor, "vertex " + std::to_string(v0) + " is fixed by gamma");
    const int n = sg.graph().vertex_count();
    std::vector<Edge> added{{n, n + 1}, {n + 1, n + 2}, {n + 2, n}};
    for (int k = 0; k < 3; ++k) added.emplace_back(n + k, gamma.power(v0, k));
    return extend(sg, {}, std::move(added));
}

SymGraph apply_move(const SymGraph& sg, const Move& move) {
    const int n = sg.graph().vertex_count();
    if (move.new_vertices != std::array<Vertex, 3>{n, n + 1, n + 2})
        throw Error(ErrorCode::InvalidAnchor, "new vertices must be the next three indices");
    const auto need = [&](std::size_t count) {
        if (move.anchors.size() != count)
            throw Error(ErrorCode::InvalidAnchor, std::string(to_string(move.kind)) + " takes " +
                                                      std::to_string(count) + " anchors");
    };
    switch (move.kind) {
        case MoveKind::VertexAddition:
            need(2);
            return apply_vertex_addition(sg, move.anchors[0], move.anchors[1]);
        case MoveKind::EdgeSplit:
            need(3);
            return apply_edge_split(sg, move.anchors[0], move.anchors[1], move.anchors[2]);
        case MoveKind::DeltaExtension:
            need(1);
            return apply_delta_extension(sg, move.anchors[0]);
    }
    throw Error(ErrorCode::InvalidAnchor, "unknown move kind");
}

namespace {

std::array<Vertex, 3> next_three(const SymGraph& sg) {
    const int n = sg.graph().vertex_count();
    return {n, n + 1, n + 2};
}

}  // namespace

Move make_vertex_addition(const SymGraph& sg, Vertex v1, Vertex v2) {
    return {MoveKind::VertexAddition, next_three(sg), {v1, v2}};
}

Move make_edge_split(const SymGraph& sg, Vertex v1, Vertex v2, Vertex v3) {
    return {MoveKind::EdgeSplit, next_three(sg), {v1, v2, v3}};
}

Move make_delta_extension(const SymGraph& sg, Vertex v0) {
    return {MoveKind::DeltaExtension, next_three(sg), {v0}};
}

SymGraph k3_base() { return SymGraph(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), C3Action({1, 2, 0})); }

}  // namespace c3rigid
