#pragma once

#include <optional>
#include <vector>

#include "c3rigid/graph.hpp"
#include "c3rigid/qsqrt3.hpp"
#include "c3rigid/realization.hpp"
#include "c3rigid/tree_partition.hpp"

namespace c3rigid {

/// Joint positions plus one nonzero direction per edge (aligned with
/// Graph::edges()). Adjacent joints may coincide; every edge must satisfy
/// p(u) - p(v) = lambda * q(e) for some scalar lambda, possibly zero.
struct Frame {
    std::vector<Point2> positions;
    std::vector<Point2> directions;
};

/// e0 = (0,0), e1 = (1,0), e2 = (1/2, sqrt3/2).
const Point2& frame_point(int i);

/// Direction carried by edges of tree i: e_{i+2} - e_{i+1}.
Point2 tree_direction(int i);

/// Centroid of e0, e1, e2: the rotation centre of the frame.
const Point2& frame_centre();

/// Vertices missing tree i sit at e_i; edges of tree i point along
/// tree_direction(i). Throws InvalidPartition when `tp` fails verification.
Frame frame_from_partition(const SymGraph& sg, const TreePartition& tp);

/// The lambda condition holds on every edge and no direction is zero.
bool frame_is_consistent(const Graph& g, const Frame& f);

/// Per-edge lambda with p(u) - p(v) = lambda q(e). Throws
/// InternalInvariantBroken for inconsistent frames.
std::vector<QSqrt3> frame_scalars(const Graph& g, const Frame& f);

/// |E| x 2n; the row of {vi, vj} (vi < vj) has q in vi's columns and -q in
/// vj's. Throws ZeroDirection.
ExactMatrix generalized_rigidity_matrix(const Graph& g, const Frame& f);

/// Edge indices whose endpoints share a position.
std::vector<int> coincident_edges(const Graph& g, const Frame& f);

/// One symmetric pull-apart: `component` is moved along
/// tree_direction(direction_tree), its gamma images along the rotated
/// directions.
struct SeparationChoice {
    std::vector<Vertex> component;
    int component_tree = 0;
    int direction_tree = 0;
};

/// Picks the coincident cluster holding the smallest vertex with a coincident
/// edge, and inside it the component (through that vertex) of one tree class,
/// trying the class T(i+2) first when the cluster misses tree i. Returns
/// nullopt when no adjacent joints coincide; throws NoSeparableComponent when
/// both classes span the cluster.
std::optional<SeparationChoice> choose_separation(const SymGraph& sg, const TreePartition& tp, const Frame& f);

/// The frame at parameter t for `choice`, or nullopt when t creates a new
/// coincidence or puts a moved joint on the rotation centre. Throws
/// InvalidParameter for t = 0.
std::optional<Frame> pull_apart_at(const SymGraph& sg, const Frame& f, const SeparationChoice& choice,
                                   const mpq_class& t);

inline constexpr int kMaxParameterAttempts = 50;

/// 1/2, 1/3, 1/5, 1/7, ... (reciprocals of the first `count` primes).
std::vector<mpq_class> pull_apart_parameters(int count = kMaxParameterAttempts);

struct PullApartRound {
    SeparationChoice choice;
    mpq_class t;
    int attempts = 0;
    Eigen::Index rank = 0;
    int coincident_before = 0;
    int coincident_after = 0;
};

/// One round: choose a separation and take the first parameter keeping the
/// generalized rigidity matrix at full row rank. Identity when nothing
/// coincides. Throws NoSeparableComponent or ExhaustedT.
Frame pull_apart(const SymGraph& sg, const TreePartition& tp, const Frame& f, PullApartRound* round = nullptr);

struct PullApartResult {
    Frame frame;
    Eigen::Index initial_rank = 0;
    std::vector<PullApartRound> rounds;
};

/// Rounds of pull_apart until no adjacent joints coincide.
PullApartResult pull_apart_all(const SymGraph& sg, const TreePartition& tp, const Frame& f);

/// Translates the frame's positions so the rotation centre is the origin and
/// certifies rank m of the rigidity matrix. Throws CoincidentAdjacentJoints.
Placement framework_from_frame(const SymGraph& sg, const Frame& f);

}  // namespace c3rigid
