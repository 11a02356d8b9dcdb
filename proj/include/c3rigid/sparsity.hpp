#pragma once

#include <optional>
#include <vector>

#include "c3rigid/graph.hpp"

namespace c3rigid {

/// Verdict of the (2,3)-pebble game.
struct SparsityReport {
    bool is_sparse = false;
    bool is_tight = false;
    int edge_count = 0;
    int target = 0;  // 2n - 3
    /// Sorted vertex set spanning at least 2|V|-2 edges; present iff !is_sparse.
    std::optional<std::vector<Vertex>> witness;
};

/// Runs the (2,3)-pebble game with edges inserted in lexicographic order.
/// On the first rejected edge the witness is the set of vertices reachable
/// from its endpoints in the pebble digraph. Throws TooFewVertices for n < 2.
SparsityReport pebble_sparsity(const Graph& g);

/// True iff the graph is (2,3)-tight (Laman). Throws TooFewVertices for n < 2.
bool laman_check(const Graph& g);

inline constexpr int kBruteForceLimit = 14;

/// Literal subset enumeration of the Laman conditions, n <= 14 (TooLarge
/// otherwise).
bool brute_force_laman(const Graph& g);

}  // namespace c3rigid
