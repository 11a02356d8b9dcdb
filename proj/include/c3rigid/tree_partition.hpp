#pragma once

#include <array>
#include <string>
#include <vector>

#include "c3rigid/certify.hpp"
#include "c3rigid/graph.hpp"

namespace c3rigid {

/// Three edge sets T0, T1, T2, each sorted.
struct TreePartition {
    std::array<std::vector<Edge>, 3> trees;

    /// Index of the tree holding `e`, or -1.
    int tree_of(const Edge& e) const;
    bool operator==(const TreePartition&) const = default;
};

/// Builds a symmetric 3Tree2 partition of the replayed graph by updating the
/// K3 partition {01}, {12}, {20} once per move. Throws the move errors or
/// InternalInvariantBroken.
TreePartition build_tree_partition(const ConstructionSequence& seq);

/// Maps every edge through `relabel` (as in ConstructionSequence::relabel).
TreePartition relabel_partition(const TreePartition& tp, const std::vector<Vertex>& relabel);

struct PartitionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PartitionReport {
    std::vector<PartitionCheck> checks;  // partition, trees, two_per_vertex, equivariant, proper

    bool all_passed() const;
    const PartitionCheck& check(const std::string& name) const;
};

/// Checks the partition property, that each part is a tree, that every vertex
/// lies in exactly two trees, gamma(Ti) = T(i+1), and properness (through
/// sparsity of the graph). Never throws on bad input; failures are entries.
PartitionReport verify_tree_partition(const SymGraph& sg, const TreePartition& tp);

}  // namespace c3rigid
