#include "c3rigid/graph.hpp"

#include <algorithm>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::LoopOrDuplicateEdge: return "LoopOrDuplicateEdge";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::NotOrderThree: return "NotOrderThree";
        case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorCode::MissingAction: return "MissingAction";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidAnchor: return "InvalidAnchor";
        case ErrorCode::DegenerateMove: return "DegenerateMove";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::FixedAnchor: return "FixedAnchor";
        case ErrorCode::NotIsostatic: return "NotIsostatic";
        case ErrorCode::AtBaseCase: return "AtBaseCase";
        case ErrorCode::IntermediateNotTight: return "IntermediateNotTight";
        case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FixedVertexPresent: return "FixedVertexPresent";
        case ErrorCode::ExhaustedRetries: return "ExhaustedRetries";
        case ErrorCode::DegenerateSpan: return "DegenerateSpan";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::ZeroDirection: return "ZeroDirection";
        case ErrorCode::NoSeparableComponent: return "NoSeparableComponent";
        case ErrorCode::ExhaustedT: return "ExhaustedT";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::CoincidentAdjacentJoints: return "CoincidentAdjacentJoints";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw Error(ErrorCode::SchemaError, "negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw Error(ErrorCode::LoopOrDuplicateEdge, "loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n) throw Error(ErrorCode::LoopOrDuplicateEdge, "endpoint out of range in " + edge_str(e));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw Error(ErrorCode::LoopOrDuplicateEdge, "duplicate edge " + edge_str(*dup));

    adjacency_.assign(n, {});
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& adj = adjacency_[a].size() < adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const Vertex target = adjacency_[a].size() < adjacency_[b].size() ? b : a;
    return std::binary_search(adj.begin(), adj.end(), target);
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::induced_edge_count(const std::vector<bool>& in_set) const {
    int count = 0;
    for (const Edge& e : edges_)
        if (in_set[e.u] && in_set[e.v]) ++count;
    return count;
}

C3Action::C3Action(std::vector<Vertex> gamma) : gamma_(std::move(gamma)) {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (Vertex image : gamma_) {
        if (image < 0 || image >= n || seen[image])
            throw Error(ErrorCode::NotAPermutation, "c3 is not a permutation of 0.." + std::to_string(n - 1));
        seen[image] = true;
    }
    gamma2_.resize(n);
    bool identity = true;
    for (Vertex v = 0; v < n; ++v) {
        gamma2_[v] = gamma_[gamma_[v]];
        if (gamma_[v] != v) identity = false;
        if (gamma_[gamma2_[v]] != v)
            throw Error(ErrorCode::NotOrderThree, "gamma^3 moves vertex " + std::to_string(v));
    }
    if (identity) throw Error(ErrorCode::NotOrderThree, "identity is not an order-3 action");
}

Vertex C3Action::power(Vertex v, int k) const {
    switch (((k % 3) + 3) % 3) {
        case 0: return v;
        case 1: return gamma_[v];
        default: return gamma2_[v];
    }
}

SymGraph::SymGraph(Graph graph, C3Action action) : graph_(std::move(graph)) {
    if (action.size() != graph_.vertex_count())
        throw Error(ErrorCode::NotAPermutation, "c3 has " + std::to_string(action.size()) + " entries for " +
                                                    std::to_string(graph_.vertex_count()) + " vertices");
    // A bijection on vertices that maps edges into edges is an automorphism of
    // a finite graph.
    for (const Edge& e : graph_.edges()) {
        if (!graph_.has_edge(action(e)))
            throw Error(ErrorCode::NotAnAutomorphism,
                        "edge " + edge_str(e) + " maps to non-edge " + edge_str(action(e)));
    }
    action_ = std::move(action);
}

const C3Action& SymGraph::action() const {
    if (!action_) throw Error(ErrorCode::MissingAction, "graph carries no c3 action");
    return *action_;
}

FixedCounts count_fixed(const SymGraph& sg) {
    FixedCounts counts;
    if (!sg.has_action()) return counts;
    const C3Action& gamma = sg.action();
    for (Vertex v = 0; v < sg.graph().vertex_count(); ++v)
        if (gamma.fixes(v)) ++counts.joints;
    for (const Edge& e : sg.graph().edges())
        if (gamma(e) == e) ++counts.bars;
    return counts;
}

std::array<Vertex, 3> orbit(const C3Action& action, Vertex v) { return {v, action(v), action.squared(v)}; }

std::vector<Edge> edge_orbit(const C3Action& action, const Edge& e) {
    std::vector<Edge> out{e};
    for (Edge img : {action(e), action.squared(e)})
        if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    return out;
}

void require_c3(const SymGraph& sg) {
    (void)sg.action();
    if (sg.graph().vertex_count() < 3)
        throw Error(ErrorCode::TooFewVertices, "C3 operations need at least 3 vertices");
}

Graph remove_vertices(const Graph& g, const std::vector<bool>& removed, std::span<const Edge> extra,
                      std::vector<Vertex>* kept) {
    std::vector<Vertex> index(g.vertex_count(), -1);
    std::vector<Vertex> survivors;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        index[v] = static_cast<Vertex>(survivors.size());
        survivors.push_back(v);
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() + extra.size());
    for (const Edge& e : g.edges())
        if (!removed[e.u] && !removed[e.v]) edges.emplace_back(index[e.u], index[e.v]);
    for (const Edge& e : extra) edges.emplace_back(index[e.u], index[e.v]);
    Graph out(static_cast<int>(survivors.size()), std::move(edges));
    if (kept) *kept = std::move(survivors);
    return out;
}

}  // namespace c3rigid
