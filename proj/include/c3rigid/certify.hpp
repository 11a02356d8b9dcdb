#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "c3rigid/graph.hpp"
#include "c3rigid/moves.hpp"
#include "c3rigid/sparsity.hpp"

namespace c3rigid {

enum class FailedCondition { Count, SubgraphSparsity, FixedVertex };

std::string_view to_string(FailedCondition reason);

struct C3Verdict {
    bool isostatic = false;
    std::vector<FailedCondition> reasons;  // empty iff isostatic
    SparsityReport sparsity;
    FixedCounts fixed;
    std::optional<std::vector<Vertex>> witness_subgraph;
    std::optional<Vertex> witness_fixed_vertex;

    bool failed(FailedCondition r) const;
};

/// Laman conditions plus j = 0. Throws TooFewVertices / MissingAction.
C3Verdict check_c3_isostatic(const SymGraph& sg);

/// Which branch of the reduction produced a step.
enum class ReductionCase { Valence2, Triangle, CommonNeighbourOrbit, PairInsertion };

std::string_view to_string(ReductionCase c);

struct ReductionStep {
    SymGraph reduced;
    /// Forward move in the labels of `reduced`.
    Move move;
    /// relabel[x] = vertex of the input for vertex x of apply_move(reduced, move).
    std::vector<Vertex> relabel;
    ReductionCase branch = ReductionCase::Valence2;
};

/// Removes one vertex orbit, undoing a single symmetric move. Throws
/// AtBaseCase (n = 3) or NotIsostatic.
ReductionStep reduce_once(const SymGraph& sg);

struct ConstructionSequence {
    SymGraph base = k3_base();
    std::vector<Move> moves;
    /// relabel[x] = input vertex for vertex x of the replayed graph. Commutes
    /// with the two gamma actions.
    std::vector<Vertex> relabel;
};

/// Iterates reduce_once down to K3. Throws NotIsostatic.
ConstructionSequence extract_sequence(const SymGraph& sg);

struct ReplayStep {
    int vertices = 0;
    int edges = 0;
    bool tight = false;
    int fixed_joints = 0;
};

struct ReplayResult {
    SymGraph graph;
    std::vector<ReplayStep> trace;  // one entry per intermediate, base included
};

/// Applies the moves in order, validating every intermediate. Throws the move
/// errors or IntermediateNotTight.
ReplayResult replay_sequence(const ConstructionSequence& seq);

/// True iff relabel is a bijection carrying `from`'s edges onto `to`'s edges
/// and intertwining the actions.
bool equal_under_relabeling(const SymGraph& from, const SymGraph& to, const std::vector<Vertex>& relabel);

}  // namespace c3rigid
