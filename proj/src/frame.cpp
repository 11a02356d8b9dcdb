#include "c3rigid/frame.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

namespace {

bool is_zero_vec(const Point2& p) { return p.x().is_zero() && p.y().is_zero(); }

// Tree index of every edge, aligned with g.edges().
std::vector<int> edge_trees(const Graph& g, const TreePartition& tp) {
    std::vector<int> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const int t = tp.tree_of(e);
        if (t < 0) throw Error(ErrorCode::InvalidPartition, "edge not covered by the partition");
        out.push_back(t);
    }
    return out;
}

// The tree each vertex misses; vertices in all three trees get -1.
std::vector<int> missing_trees(const Graph& g, const TreePartition& tp) {
    std::vector<std::array<bool, 3>> in(g.vertex_count(), {false, false, false});
    for (int i = 0; i < 3; ++i)
        for (const Edge& e : tp.trees[i]) in[e.u][i] = in[e.v][i] = true;
    std::vector<int> out(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int missing = -1, count = 0;
        for (int i = 0; i < 3; ++i) {
            if (!in[v][i]) {
                missing = i;
                ++count;
            }
        }
        if (count == 1) out[v] = missing;
    }
    return out;
}

// Vertices reachable from `start` along edges accepted by `use`.
template <typename Pred>
std::vector<Vertex> component(const Graph& g, Vertex start, Pred use) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{start}, out;
    seen[start] = true;
    std::vector<std::vector<std::pair<Vertex, int>>> adj(g.vertex_count());
    const auto edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (!use(i)) continue;
        adj[edges[i].u].emplace_back(edges[i].v, i);
        adj[edges[i].v].emplace_back(edges[i].u, i);
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (auto [w, idx] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const Point2& frame_point(int i) {
    static const std::array<Point2, 3> points = [] {
        std::array<Point2, 3> e;
        e[0] = Point2(QSqrt3(0), QSqrt3(0));
        e[1] = Point2(QSqrt3(1), QSqrt3(0));
        e[2] = Point2(QSqrt3::from_fractions(1, 2), QSqrt3::from_fractions(0, 1, 1, 2));
        return e;
    }();
    return points[((i % 3) + 3) % 3];
}

Point2 tree_direction(int i) { return frame_point(i + 2) - frame_point(i + 1); }

const Point2& frame_centre() {
    static const Point2 c(QSqrt3::from_fractions(1, 2), QSqrt3::from_fractions(0, 1, 1, 6));
    return c;
}

Frame frame_from_partition(const SymGraph& sg, const TreePartition& tp) {
    const PartitionReport report = verify_tree_partition(sg, tp);
    if (!report.all_passed()) {
        for (const PartitionCheck& c : report.checks)
            if (!c.passed) throw Error(ErrorCode::InvalidPartition, c.name + ": " + c.detail);
    }
    const Graph& g = sg.graph();
    const std::vector<int> missing = missing_trees(g, tp);
    Frame f;
    f.positions.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (missing[v] < 0)
            throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(v) + " is not in exactly two trees");
        f.positions.push_back(frame_point(missing[v]));
    }
    for (int t : edge_trees(g, tp)) f.directions.push_back(tree_direction(t));
    return f;
}

std::vector<QSqrt3> frame_scalars(const Graph& g, const Frame& f) {
    if (static_cast<int>(f.positions.size()) != g.vertex_count() ||
        static_cast<int>(f.directions.size()) != g.edge_count())
        throw Error(ErrorCode::InternalInvariantBroken, "frame size does not match the graph");
    std::vector<QSqrt3> out;
    out.reserve(g.edge_count());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point2& q = f.directions[i];
        if (is_zero_vec(q)) throw Error(ErrorCode::ZeroDirection, "edge " + std::to_string(i) + " has q = 0");
        const Point2 d = f.positions[edges[i].u] - f.positions[edges[i].v];
        if (!(d.x() * q.y() - d.y() * q.x()).is_zero())
            throw Error(ErrorCode::InternalInvariantBroken,
                        "edge {" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) +
                            "} is not parallel to its direction");
        out.push_back(q.x().is_zero() ? d.y() / q.y() : d.x() / q.x());
    }
    return out;
}

bool frame_is_consistent(const Graph& g, const Frame& f) {
    try {
        (void)frame_scalars(g, f);
        return true;
    } catch (const Error&) {
        return false;
    }
}

ExactMatrix generalized_rigidity_matrix(const Graph& g, const Frame& f) {
    if (static_cast<int>(f.directions.size()) != g.edge_count())
        throw Error(ErrorCode::InternalInvariantBroken, "frame has " + std::to_string(f.directions.size()) +
                                                            " directions for " + std::to_string(g.edge_count()) +
                                                            " edges");
    ExactMatrix r = ExactMatrix::Zero(g.edge_count(), 2 * g.vertex_count());
    Eigen::Index row = 0;
    for (const Edge& e : g.edges()) {
        const Point2& q = f.directions[row];
        if (is_zero_vec(q)) throw Error(ErrorCode::ZeroDirection, "edge " + std::to_string(row) + " has q = 0");
        r.block<1, 2>(row, 2 * e.u) = q.transpose();
        r.block<1, 2>(row, 2 * e.v) = -q.transpose();
        ++row;
    }
    return r;
}

std::vector<int> coincident_edges(const Graph& g, const Frame& f) {
    std::vector<int> out;
    const auto edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (f.positions[edges[i].u] == f.positions[edges[i].v]) out.push_back(i);
    return out;
}

std::optional<SeparationChoice> choose_separation(const SymGraph& sg, const TreePartition& tp, const Frame& f) {
    const Graph& g = sg.graph();
    const std::vector<int> coincident = coincident_edges(g, f);
    if (coincident.empty()) return std::nullopt;

    std::vector<bool> is_coincident(g.edge_count(), false);
    Vertex start = g.vertex_count();
    for (int i : coincident) {
        is_coincident[i] = true;
        start = std::min(start, g.edges()[i].u);
    }
    const std::vector<int> tree = edge_trees(g, tp);
    const std::vector<int> missing = missing_trees(g, tp);
    const std::vector<Vertex> cluster = component(g, start, [&](int i) { return is_coincident[i]; });
    const int base = missing[start];
    if (base < 0) throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(start) + " misses no tree");

    for (int offset : {2, 1}) {
        const int cls = (base + offset) % 3;
        std::vector<Vertex> part =
            component(g, start, [&](int i) { return is_coincident[i] && tree[i] == cls; });
        if (part.size() == cluster.size()) continue;
        SeparationChoice choice;
        choice.component = std::move(part);
        choice.component_tree = cls;
        choice.direction_tree = (base + 3 - offset) % 3;
        return choice;
    }
    throw Error(ErrorCode::NoSeparableComponent,
                "both tree classes connect the cluster at vertex " + std::to_string(start));
}

std::optional<Frame> pull_apart_at(const SymGraph& sg, const Frame& f, const SeparationChoice& choice,
                                   const mpq_class& t) {
    if (sgn(t) == 0) throw Error(ErrorCode::InvalidParameter, "pull-apart parameter t must be nonzero");
    const Graph& g = sg.graph();
    const C3Action& gamma = sg.action();
    const Mat2<QSqrt3>& rot = c3_rotation();

    Frame out = f;
    std::vector<bool> moved(g.vertex_count(), false);
    Point2 d = tree_direction(choice.direction_tree) * QSqrt3(t);
    for (int k = 0; k < 3; ++k) {
        for (Vertex a : choice.component) {
            const Vertex img = gamma.power(a, k);
            if (moved[img])
                throw Error(ErrorCode::NoSeparableComponent, "separated component meets its own gamma image");
            moved[img] = true;
            out.positions[img] += d;
        }
        d = rot * d;
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (moved[v] && out.positions[v] == frame_centre()) return std::nullopt;

    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const bool was = f.positions[e.u] == f.positions[e.v];
        const bool is = out.positions[e.u] == out.positions[e.v];
        if (is && !was) return std::nullopt;
        if (!was && (moved[e.u] || moved[e.v])) out.directions[i] = out.positions[e.u] - out.positions[e.v];
    }
    return out;
}

std::vector<mpq_class> pull_apart_parameters(int count) {
    std::vector<mpq_class> out;
    for (long p = 2; static_cast<int>(out.size()) < count; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
        if (prime) out.emplace_back(1, p);
    }
    return out;
}

Frame pull_apart(const SymGraph& sg, const TreePartition& tp, const Frame& f, PullApartRound* round) {
    const Graph& g = sg.graph();
    const std::optional<SeparationChoice> choice = choose_separation(sg, tp, f);
    if (!choice) {
        if (round) *round = PullApartRound{};
        return f;
    }
    const int before = static_cast<int>(coincident_edges(g, f).size());
    int attempts = 0;
    for (const mpq_class& t : pull_apart_parameters()) {
        ++attempts;
        std::optional<Frame> next = pull_apart_at(sg, f, *choice, t);
        if (!next) continue;
        const Eigen::Index rank = exact_rank(generalized_rigidity_matrix(g, *next));
        if (rank != g.edge_count()) continue;
        if (round) {
            round->choice = *choice;
            round->t = t;
            round->attempts = attempts;
            round->rank = rank;
            round->coincident_before = before;
            round->coincident_after = static_cast<int>(coincident_edges(g, *next).size());
        }
        return *std::move(next);
    }
    throw Error(ErrorCode::ExhaustedT, "no independent pull-apart within " + std::to_string(kMaxParameterAttempts) +
                                           " values of t");
}

PullApartResult pull_apart_all(const SymGraph& sg, const TreePartition& tp, const Frame& f) {
    const Graph& g = sg.graph();
    PullApartResult result;
    result.frame = f;
    result.initial_rank = exact_rank(generalized_rigidity_matrix(g, f));
    while (!coincident_edges(g, result.frame).empty()) {
        PullApartRound round;
        result.frame = pull_apart(sg, tp, result.frame, &round);
        if (round.coincident_after >= round.coincident_before)
            throw Error(ErrorCode::InternalInvariantBroken, "pull-apart round separated nothing");
        result.rounds.push_back(std::move(round));
    }
    return result;
}

Placement framework_from_frame(const SymGraph& sg, const Frame& f) {
    const Graph& g = sg.graph();
    const std::vector<int> coincident = coincident_edges(g, f);
    if (!coincident.empty()) {
        const Edge& e = g.edges()[coincident.front()];
        throw Error(ErrorCode::CoincidentAdjacentJoints,
                    "joints " + std::to_string(e.u) + " and " + std::to_string(e.v) + " coincide");
    }
    Placement p;
    p.positions.reserve(f.positions.size());
    for (const Point2& x : f.positions) p.positions.push_back(x - frame_centre());
    if (!is_c3_symmetric(sg, p.positions))
        throw Error(ErrorCode::InternalInvariantBroken, "frame positions are not C3-symmetric about the centre");
    const Eigen::Index rank = exact_rank(rigidity_matrix(g, p));
    if (rank != g.edge_count())
        throw Error(ErrorCode::InternalInvariantBroken,
                    "framework rank " + std::to_string(rank) + " below edge count " + std::to_string(g.edge_count()));
    p.framework = true;
    return p;
}

}  // namespace c3rigid
