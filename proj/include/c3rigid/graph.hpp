#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace c3rigid {

using Vertex = int;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 0..n-1. Edges are kept sorted
/// lexicographically; adjacency lists are sorted as well.
class Graph {
public:
    Graph() = default;

    /// Throws LoopOrDuplicateEdge on loops, repeated pairs or endpoints >= n.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    /// Position of `e` in `edges()`, or -1.
    int edge_index(const Edge& e) const;

    /// Number of edges with both endpoints in `vertices` (membership mask).
    int induced_edge_count(const std::vector<bool>& in_set) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Order-3 permutation of the vertex set, stored in one-line form together
/// with its square.
class C3Action {
public:
    /// Throws NotAPermutation or NotOrderThree (identity included).
    explicit C3Action(std::vector<Vertex> gamma);

    int size() const { return static_cast<int>(gamma_.size()); }
    Vertex operator()(Vertex v) const { return gamma_[v]; }
    Vertex squared(Vertex v) const { return gamma2_[v]; }
    Vertex power(Vertex v, int k) const;
    Edge operator()(const Edge& e) const { return {gamma_[e.u], gamma_[e.v]}; }
    Edge squared(const Edge& e) const { return {gamma2_[e.u], gamma2_[e.v]}; }
    Edge power(const Edge& e, int k) const { return {power(e.u, k), power(e.v, k)}; }

    bool fixes(Vertex v) const { return gamma_[v] == v; }
    std::span<const Vertex> one_line() const { return gamma_; }

    bool operator==(const C3Action& other) const { return gamma_ == other.gamma_; }

private:
    std::vector<Vertex> gamma_;
    std::vector<Vertex> gamma2_;
};

/// A graph together with an optional order-3 automorphism. Without an action
/// only the plain Laman machinery applies.
class SymGraph {
public:
    SymGraph() = default;
    explicit SymGraph(Graph graph) : graph_(std::move(graph)) {}

    /// Throws NotAnAutomorphism (naming a witness edge) or NotAPermutation on
    /// a size mismatch.
    SymGraph(Graph graph, C3Action action);

    const Graph& graph() const { return graph_; }
    bool has_action() const { return action_.has_value(); }

    /// Throws MissingAction when the graph carries no symmetry.
    const C3Action& action() const;

    bool operator==(const SymGraph& other) const = default;

private:
    Graph graph_;
    std::optional<C3Action> action_;
};

struct FixedCounts {
    int joints = 0;  // j: vertices with gamma(v) == v
    int bars = 0;    // b: edges with gamma(e) == e
};

FixedCounts count_fixed(const SymGraph& sg);

/// (v, gamma(v), gamma^2(v)).
std::array<Vertex, 3> orbit(const C3Action& action, Vertex v);

/// {e, gamma(e), gamma^2(e)} with duplicates removed, in that order.
std::vector<Edge> edge_orbit(const C3Action& action, const Edge& e);

/// Throws TooFewVertices unless `sg` carries an action and has >= 3 vertices.
void require_c3(const SymGraph& sg);

/// Builds the subgraph obtained by deleting `removed` (membership mask) and
/// adding `extra` edges, renumbering survivors in increasing order. `kept`
/// receives old indices of the survivors.
Graph remove_vertices(const Graph& g, const std::vector<bool>& removed, std::span<const Edge> extra,
                      std::vector<Vertex>* kept = nullptr);

}  // namespace c3rigid
