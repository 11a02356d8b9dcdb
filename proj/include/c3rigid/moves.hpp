#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "c3rigid/graph.hpp"

namespace c3rigid {

enum class MoveKind { VertexAddition, EdgeSplit, DeltaExtension };

std::string_view to_string(MoveKind kind);
MoveKind move_kind_from_string(std::string_view name);

/// One symmetric Henneberg step. New vertices are (v, gamma v, gamma^2 v) and
/// always take the next three indices. Anchors:
///   VertexAddition  (v1, v2)
///   EdgeSplit       (v1, v2, v3), the orbit of {v1, v2} is removed
///   DeltaExtension  (v0)
struct Move {
    MoveKind kind = MoveKind::VertexAddition;
    std::array<Vertex, 3> new_vertices{};
    std::vector<Vertex> anchors;

    bool operator==(const Move&) const = default;
};

/// Adds v, w, z = n, n+1, n+2 joined to {v1, v2} and their images.
/// Throws InvalidAnchor or DegenerateMove.
SymGraph apply_vertex_addition(const SymGraph& sg, Vertex v1, Vertex v2);

/// Removes the orbit of {v1, v2} and joins v, w, z to the images of
/// (v1, v2, v3). Throws MissingEdge, InvalidAnchor or DegenerateMove.
SymGraph apply_edge_split(const SymGraph& sg, Vertex v1, Vertex v2, Vertex v3);

/// Adds the triangle v, w, z with spokes to v0 and its images.
/// Throws FixedAnchor or InvalidAnchor.
SymGraph apply_delta_extension(const SymGraph& sg, Vertex v0);

/// Dispatches on `move.kind`; `move.new_vertices` must be (n, n+1, n+2).
SymGraph apply_move(const SymGraph& sg, const Move& move);

Move make_vertex_addition(const SymGraph& sg, Vertex v1, Vertex v2);
Move make_edge_split(const SymGraph& sg, Vertex v1, Vertex v2, Vertex v3);
Move make_delta_extension(const SymGraph& sg, Vertex v0);

/// K3 on {0, 1, 2} with gamma = (0 1 2).
SymGraph k3_base();

}  // namespace c3rigid
