#include "c3rigid/certify.hpp"

#include <algorithm>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

std::string_view to_string(FailedCondition reason) {
    switch (reason) {
        case FailedCondition::Count: return "count";
        case FailedCondition::SubgraphSparsity: return "subgraph_sparsity";
        case FailedCondition::FixedVertex: return "fixed_vertex";
    }
    return "unknown";
}

std::string_view to_string(ReductionCase c) {
    switch (c) {
        case ReductionCase::Valence2: return "valence2";
        case ReductionCase::Triangle: return "triangle_orbit";
        case ReductionCase::CommonNeighbourOrbit: return "common_neighbour_orbit";
        case ReductionCase::PairInsertion: return "pair_insertion";
    }
    return "unknown";
}

bool C3Verdict::failed(FailedCondition r) const {
    return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

C3Verdict check_c3_isostatic(const SymGraph& sg) {
    require_c3(sg);
    C3Verdict verdict;
    verdict.sparsity = pebble_sparsity(sg.graph());
    verdict.fixed = count_fixed(sg);

    if (verdict.sparsity.edge_count != verdict.sparsity.target) verdict.reasons.push_back(FailedCondition::Count);
    if (!verdict.sparsity.is_sparse) {
        verdict.reasons.push_back(FailedCondition::SubgraphSparsity);
        verdict.witness_subgraph = verdict.sparsity.witness;
    }
    if (verdict.fixed.joints > 0) {
        verdict.reasons.push_back(FailedCondition::FixedVertex);
        const C3Action& gamma = sg.action();
        for (Vertex v = 0; v < sg.graph().vertex_count(); ++v)
            if (gamma.fixes(v)) {
                verdict.witness_fixed_vertex = v;
                break;
            }
    }
    verdict.isostatic = verdict.reasons.empty();
    return verdict;
}

namespace {

// Bookkeeping for deleting the orbit of one vertex and renumbering.
struct OrbitRemoval {
    std::array<Vertex, 3> orbit{};
    std::vector<bool> removed;
    std::vector<Vertex> kept;   // reduced index -> input index
    std::vector<Vertex> index;  // input index -> reduced index (-1 if removed)
};

OrbitRemoval plan_removal(const SymGraph& sg, Vertex v) {
    const int n = sg.graph().vertex_count();
    OrbitRemoval r;
    r.orbit = orbit(sg.action(), v);
    r.removed.assign(n, false);
    for (Vertex x : r.orbit) r.removed[x] = true;
    r.index.assign(n, -1);
    for (Vertex x = 0; x < n; ++x) {
        if (r.removed[x]) continue;
        r.index[x] = static_cast<Vertex>(r.kept.size());
        r.kept.push_back(x);
    }
    return r;
}

std::optional<ReductionStep> finish(const SymGraph& sg, const OrbitRemoval& r, std::span<const Edge> extra,
                                    MoveKind kind, std::vector<Vertex> anchors, ReductionCase branch,
                                    bool require_laman) {
    Graph reduced_graph = remove_vertices(sg.graph(), r.removed, extra);
    if (require_laman && !laman_check(reduced_graph)) return std::nullopt;

    const C3Action& gamma = sg.action();
    std::vector<Vertex> reduced_gamma;
    reduced_gamma.reserve(r.kept.size());
    for (Vertex x : r.kept) reduced_gamma.push_back(r.index[gamma(x)]);

    ReductionStep step{SymGraph(std::move(reduced_graph), C3Action(std::move(reduced_gamma))), {}, r.kept, branch};
    for (Vertex& a : anchors) a = r.index[a];
    const int m = step.reduced.graph().vertex_count();
    step.move = Move{kind, {m, m + 1, m + 2}, std::move(anchors)};
    step.relabel.insert(step.relabel.end(), r.orbit.begin(), r.orbit.end());

    if (!equal_under_relabeling(apply_move(step.reduced, step.move), sg, step.relabel))
        throw Error(ErrorCode::InternalInvariantBroken, "reduction does not invert its move");
    return step;
}

ReductionStep reduce_unchecked(const SymGraph& sg) {
    const Graph& g = sg.graph();
    const C3Action& gamma = sg.action();
    const int n = g.vertex_count();

    Vertex v = -1;
    for (int wanted : {2, 3}) {
        for (Vertex x = 0; x < n && v < 0; ++x)
            if (g.degree(x) == wanted) v = x;
        if (v >= 0) break;
    }
    if (v < 0) throw Error(ErrorCode::InternalInvariantBroken, "no vertex of valence 2 or 3");

    const OrbitRemoval r = plan_removal(sg, v);
    const auto nbrs = g.neighbors(v);
    std::vector<Vertex> nv(nbrs.begin(), nbrs.end());
    const bool orbit_adjacent = g.has_edge(v, gamma(v));

    if (nv.size() == 2) {
        if (orbit_adjacent) throw Error(ErrorCode::InternalInvariantBroken, "valence-2 orbit spans a triangle");
        return *finish(sg, r, {}, MoveKind::VertexAddition, nv, ReductionCase::Valence2, false);
    }

    if (orbit_adjacent) {
        const Vertex v0 = *std::find_if(nv.begin(), nv.end(), [&](Vertex x) { return !r.removed[x]; });
        return *finish(sg, r, {}, MoveKind::DeltaExtension, {v0}, ReductionCase::Triangle, false);
    }

    // Neighbourhood equal to one vertex orbit: close that orbit into a triangle.
    {
        const auto o = orbit(gamma, nv[0]);
        std::vector<Vertex> sorted_orbit(o.begin(), o.end());
        std::sort(sorted_orbit.begin(), sorted_orbit.end());
        if (sorted_orbit == nv && !gamma.fixes(nv[0])) {
            const std::vector<Edge> triangle{{o[0], o[1]}, {o[1], o[2]}, {o[2], o[0]}};
            const bool collides =
                std::any_of(triangle.begin(), triangle.end(), [&](const Edge& e) { return g.has_edge(e); });
            // A colliding triangle would be a DegenerateMove; fall through to pair insertion.
            if (!collides) {
                auto step = finish(sg, r, triangle, MoveKind::EdgeSplit, {o[0], o[1], o[2]},
                                   ReductionCase::CommonNeighbourOrbit, true);
                if (step) return std::move(*step);
            }
        }
    }

    const std::vector<bool> only_v = [&] {
        std::vector<bool> mask(n, false);
        mask[v] = true;
        return mask;
    }();
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const Edge pair(nv[i], nv[j]);
            if (g.has_edge(pair)) continue;
            const Edge single[] = {pair};
            if (!laman_check(remove_vertices(g, only_v, single))) continue;
            const std::vector<Edge> inserted = edge_orbit(gamma, pair);
            if (inserted.size() < 3 ||
                std::any_of(inserted.begin(), inserted.end(), [&](const Edge& e) { return g.has_edge(e); }))
                continue;
            const Vertex third = nv[3 - i - j];
            auto step = finish(sg, r, inserted, MoveKind::EdgeSplit, {nv[i], nv[j], third},
                               ReductionCase::PairInsertion, true);
            if (step) return std::move(*step);
        }
    }
    throw Error(ErrorCode::InternalInvariantBroken,
                "no admissible pair at valence-3 vertex " + std::to_string(v));
}

}  // namespace

ReductionStep reduce_once(const SymGraph& sg) {
    if (!check_c3_isostatic(sg).isostatic) throw Error(ErrorCode::NotIsostatic, "graph fails the C3 Laman conditions");
    if (sg.graph().vertex_count() == 3) throw Error(ErrorCode::AtBaseCase, "K3 cannot be reduced further");
    return reduce_unchecked(sg);
}

ConstructionSequence extract_sequence(const SymGraph& sg) {
    if (!check_c3_isostatic(sg).isostatic) throw Error(ErrorCode::NotIsostatic, "graph fails the C3 Laman conditions");

    std::vector<ReductionStep> steps;
    steps.reserve(sg.graph().vertex_count() / 3);  // keeps `current` valid
    const SymGraph* current = &sg;
    while (current->graph().vertex_count() > 3) {
        steps.push_back(reduce_unchecked(*current));
        current = &steps.back().reduced;
    }

    ConstructionSequence seq;
    // Match the base action (0 1 2) to whichever 3-cycle the reduced K3 carries.
    const C3Action& bottom = current->action();
    std::vector<Vertex> sigma{0, bottom(0), bottom.squared(0)};

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const int m = static_cast<int>(sigma.size());
        std::vector<Vertex> inverse(m);
        for (Vertex x = 0; x < m; ++x) inverse[sigma[x]] = x;

        Move move = it->move;
        for (Vertex& a : move.anchors) a = inverse[a];
        seq.moves.push_back(std::move(move));

        std::vector<Vertex> next(m + 3);
        for (Vertex x = 0; x < m; ++x) next[x] = it->relabel[sigma[x]];
        for (int k = 0; k < 3; ++k) next[m + k] = it->relabel[m + k];
        sigma = std::move(next);
    }
    seq.relabel = std::move(sigma);
    return seq;
}

ReplayResult replay_sequence(const ConstructionSequence& seq) {
    ReplayResult result{seq.base, {}};
    auto record = [&] {
        const Graph& g = result.graph.graph();
        ReplayStep step{g.vertex_count(), g.edge_count(), laman_check(g), count_fixed(result.graph).joints};
        result.trace.push_back(step);
        if (!step.tight || step.fixed_joints != 0)
            throw Error(ErrorCode::IntermediateNotTight,
                        "intermediate with " + std::to_string(step.vertices) + " vertices is not C3-isostatic");
    };
    record();
    for (const Move& move : seq.moves) {
        result.graph = apply_move(result.graph, move);
        record();
    }
    return result;
}

bool equal_under_relabeling(const SymGraph& from, const SymGraph& to, const std::vector<Vertex>& relabel) {
    const Graph& a = from.graph();
    const Graph& b = to.graph();
    const int n = a.vertex_count();
    if (b.vertex_count() != n || static_cast<int>(relabel.size()) != n || a.edge_count() != b.edge_count())
        return false;
    std::vector<bool> hit(n, false);
    for (Vertex x : relabel) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (const Edge& e : a.edges())
        if (!b.has_edge(relabel[e.u], relabel[e.v])) return false;
    if (from.has_action() != to.has_action()) return false;
    if (from.has_action()) {
        for (Vertex x = 0; x < n; ++x)
            if (relabel[from.action()(x)] != to.action()(relabel[x])) return false;
    }
    return true;
}

}  // namespace c3rigid
