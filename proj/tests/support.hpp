#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "c3rigid/graph.hpp"
#include "c3rigid/moves.hpp"
#include "c3rigid/qsqrt3.hpp"

namespace c3rigid::testing {

using Rng = std::mt19937_64;

SymGraph k3();
SymGraph prism();
SymGraph k33();       // gamma = (0 1 2)(3 4 5)
SymGraph k13_hub();   // hub 3 fixed
SymGraph k4_c3();     // vertex 3 fixed
SymGraph octahedron();
Graph k4();

/// Erdos-Renyi style graph on n vertices with edge probability `p`.
Graph random_graph(Rng& rng, int n, double p);

/// Graph with exactly m random edges.
Graph random_graph_m(Rng& rng, int n, int m);

/// A uniformly chosen valid symmetric move on `sg` (any kind).
Move random_move(Rng& rng, const SymGraph& sg);

/// K3 followed by `moves` random valid moves.
SymGraph random_tight_symgraph(Rng& rng, int moves, std::vector<Move>* applied = nullptr);

/// Removes one edge orbit and adds a non-edge orbit of the same size: the
/// action and the edge count survive, sparsity may not.
SymGraph swap_edge_orbit(Rng& rng, const SymGraph& sg);

/// Every induced subgraph on >= 2 vertices meets |E(H)| <= 2|V(H)| - 3 and
/// |E| = 2n - 3, by enumeration (independent of the library's oracle).
bool laman_by_enumeration(const Graph& g);

/// Rank over Q of an integer matrix by fraction-free elimination.
int integer_rank(std::vector<std::vector<mpz_class>> m);

/// Rank over Q(sqrt3) of A + B sqrt3 (A, B integer) via the Q-rank of
/// [[A, 3B], [B, A]], which is twice the Q(sqrt3)-rank.
int qsqrt3_rank_by_embedding(const std::vector<std::vector<mpz_class>>& a,
                             const std::vector<std::vector<mpz_class>>& b);

}  // namespace c3rigid::testing
