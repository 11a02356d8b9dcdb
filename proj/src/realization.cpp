#include "c3rigid/realization.hpp"

#include <random>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

const Mat2<QSqrt3>& c3_rotation() {
    static const Mat2<QSqrt3> rot = [] {
        const QSqrt3 half = QSqrt3::from_fractions(1, 2);
        const QSqrt3 s = QSqrt3::from_fractions(0, 1, 1, 2);  // sqrt3 / 2
        Mat2<QSqrt3> r;
        r << -half, -s, s, -half;
        return r;
    }();
    return rot;
}

bool is_c3_symmetric(const SymGraph& sg, std::span<const Point2> positions) {
    const C3Action& gamma = sg.action();
    if (static_cast<int>(positions.size()) != sg.graph().vertex_count()) return false;
    const Mat2<QSqrt3>& rot = c3_rotation();
    for (Vertex v = 0; v < sg.graph().vertex_count(); ++v) {
        const Point2 image = rot * positions[v];
        if (image != positions[gamma(v)]) return false;
    }
    return true;
}

bool separates_adjacent(const Graph& g, std::span<const Point2> positions) {
    for (const Edge& e : g.edges())
        if (positions[e.u] == positions[e.v]) return false;
    return true;
}

bool collinear(std::span<const Point2> positions) {
    if (positions.size() < 3) return true;
    const Point2& o = positions[0];
    std::size_t far = 1;
    while (far < positions.size() && positions[far] == o) ++far;
    if (far == positions.size()) return true;
    const Point2 d = positions[far] - o;
    for (const Point2& p : positions) {
        const Point2 q = p - o;
        if (!(d.x() * q.y() - d.y() * q.x()).is_zero()) return false;
    }
    return true;
}

Placement symmetric_generic_positions(const SymGraph& sg, std::uint64_t seed) {
    require_c3(sg);
    const Graph& g = sg.graph();
    const C3Action& gamma = sg.action();
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (gamma.fixes(v))
            throw Error(ErrorCode::FixedVertexPresent, "vertex " + std::to_string(v) + " is fixed by gamma");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(-kCoordinateBound, kCoordinateBound);
    std::uniform_int_distribution<long> denominator(1, kCoordinateBound);
    const auto draw = [&] {
        const long p = numerator(rng);
        const long q = denominator(rng);
        return QSqrt3::from_fractions(p, q);
    };

    const Mat2<QSqrt3>& rot = c3_rotation();
    Placement placement;
    placement.positions.assign(n, Point2(QSqrt3(0), QSqrt3(0)));
    for (int attempt = 0; attempt < kPlacementRetries; ++attempt) {
        bool at_centre = false;
        for (Vertex v = 0; v < n; ++v) {
            if (gamma(v) < v || gamma.squared(v) < v) continue;  // not the orbit representative
            Point2 p(draw(), draw());
            at_centre = at_centre || (p.x().is_zero() && p.y().is_zero());
            placement.positions[v] = p;
            placement.positions[gamma(v)] = rot * p;
            placement.positions[gamma.squared(v)] = rot * placement.positions[gamma(v)];
        }
        if (!at_centre && separates_adjacent(g, placement.positions)) {
            placement.framework = true;
            return placement;
        }
    }
    throw Error(ErrorCode::ExhaustedRetries, "no separating symmetric placement after " +
                                                 std::to_string(kPlacementRetries) + " draws");
}

IsostaticVerdict numeric_isostatic_check(const Graph& g, const Placement& p) {
    const int n = g.vertex_count();
    if (n < 3) throw Error(ErrorCode::TooFewVertices, "rank verdict needs at least 3 vertices");
    if (static_cast<int>(p.positions.size()) != n)
        throw Error(ErrorCode::SchemaError, "placement does not cover every vertex");
    if (collinear(p.positions)) throw Error(ErrorCode::DegenerateSpan, "placement does not span the plane");

    IsostaticVerdict v;
    v.edge_count = g.edge_count();
    v.target = 2 * n - 3;
    v.rank = exact_rank(rigidity_matrix(g, p));
    v.independent = v.rank == v.edge_count;
    v.flex_dimension = 2 * n - v.rank - 3;
    v.isostatic = v.edge_count == v.target && v.rank == v.target;
    return v;
}

}  // namespace c3rigid
