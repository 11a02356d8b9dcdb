#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "c3rigid/exact_rank.hpp"
#include "c3rigid/graph.hpp"
#include "c3rigid/qsqrt3.hpp"

namespace c3rigid {

/// Joint positions, indexed by vertex. `framework` marks placements certified
/// to separate every pair of adjacent joints.
struct Placement {
    std::vector<Point2> positions;
    bool framework = false;
};

/// Rotation through 2*pi/3 about the origin: rows (-1/2, -sqrt3/2), (sqrt3/2, -1/2).
const Mat2<QSqrt3>& c3_rotation();

/// positions[gamma(v)] == R * positions[v] for every vertex, exactly.
bool is_c3_symmetric(const SymGraph& sg, std::span<const Point2> positions);

/// Adjacent joints never coincide.
bool separates_adjacent(const Graph& g, std::span<const Point2> positions);

/// True when all points lie on one line (exact cross products).
bool collinear(std::span<const Point2> positions);

inline constexpr int kCoordinateBound = 10'000;
inline constexpr int kPlacementRetries = 100;

/// One pseudo-random rational point per gamma-orbit (the smallest vertex of
/// the orbit), rotated onto the rest of the orbit. Deterministic in `seed`.
/// Throws FixedVertexPresent, TooFewVertices or ExhaustedRetries.
Placement symmetric_generic_positions(const SymGraph& sg, std::uint64_t seed);

/// |E| x 2n matrix; the row of {vi, vj} holds pi - pj in columns (2i, 2i+1)
/// and pj - pi in (2j, 2j+1). Rows follow the sorted edge order.
template <typename Scalar>
DenseMatrix<Scalar> rigidity_matrix(const Graph& g, std::span<const Vec2<Scalar>> p) {
    DenseMatrix<Scalar> r = DenseMatrix<Scalar>::Zero(g.edge_count(), 2 * g.vertex_count());
    Eigen::Index row = 0;
    for (const Edge& e : g.edges()) {
        const Vec2<Scalar> d = p[e.u] - p[e.v];
        r.template block<1, 2>(row, 2 * e.u) = d.transpose();
        r.template block<1, 2>(row, 2 * e.v) = -d.transpose();
        ++row;
    }
    return r;
}

inline ExactMatrix rigidity_matrix(const Graph& g, const Placement& p) {
    return rigidity_matrix<QSqrt3>(g, std::span<const Point2>(p.positions));
}

struct IsostaticVerdict {
    bool isostatic = false;
    bool independent = false;  // rank == m
    Eigen::Index rank = 0;
    int edge_count = 0;
    int target = 0;                // 2n - 3
    Eigen::Index flex_dimension = 0;  // 2n - rank - 3
};

/// Exact rank verdict at the given positions. Throws TooFewVertices (n < 3)
/// or DegenerateSpan (collinear placement).
IsostaticVerdict numeric_isostatic_check(const Graph& g, const Placement& p);
inline IsostaticVerdict numeric_isostatic_check(const SymGraph& sg, const Placement& p) {
    return numeric_isostatic_check(sg.graph(), p);
}

}  // namespace c3rigid
