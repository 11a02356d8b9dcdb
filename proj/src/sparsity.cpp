#include "c3rigid/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "c3rigid/error.hpp"

namespace c3rigid {

namespace {

// Directed pebble graph for k = 2, l = 3. Each accepted edge is covered by one
// pebble of its tail; `out_` holds the heads.
class PebbleGame {
public:
    explicit PebbleGame(int n) : pebbles_(n, 2), out_(n), mark_(n, 0), parent_(n, -1) {}

    // Returns false when four pebbles cannot be gathered on {u, v}.
    bool insert(Vertex u, Vertex v) {
        while (pebbles_[u] < 2 && collect(u, v)) {}
        while (pebbles_[v] < 2 && collect(v, u)) {}
        if (pebbles_[u] + pebbles_[v] < 4) return false;
        --pebbles_[u];
        out_[u].push_back(v);
        return true;
    }

    // Vertices reachable from u or v along directed edges.
    std::vector<Vertex> reach(Vertex u, Vertex v) {
        ++epoch_;
        std::vector<Vertex> stack{u, v}, found;
        mark_[u] = mark_[v] = epoch_;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            found.push_back(x);
            for (Vertex y : out_[x]) {
                if (mark_[y] == epoch_) continue;
                mark_[y] = epoch_;
                stack.push_back(y);
            }
        }
        std::sort(found.begin(), found.end());
        return found;
    }

private:
    // Moves one free pebble to `root` by reversing a directed path, never
    // passing through `keep`.
    bool collect(Vertex root, Vertex keep) {
        ++epoch_;
        std::vector<Vertex> stack{root};
        mark_[root] = mark_[keep] = epoch_;
        parent_[root] = -1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : out_[x]) {
                if (mark_[y] == epoch_) continue;
                mark_[y] = epoch_;
                parent_[y] = x;
                if (pebbles_[y] > 0) {
                    reverse_path(y);
                    --pebbles_[y];
                    ++pebbles_[root];
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    }

    void reverse_path(Vertex end) {
        for (Vertex y = end; parent_[y] != -1; y = parent_[y]) {
            const Vertex x = parent_[y];
            auto& adj = out_[x];
            adj.erase(std::find(adj.begin(), adj.end(), y));
            out_[y].push_back(x);
        }
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::uint32_t> mark_;
    std::vector<Vertex> parent_;
    std::uint32_t epoch_ = 0;
};

}  // namespace

SparsityReport pebble_sparsity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw Error(ErrorCode::TooFewVertices, "sparsity needs at least 2 vertices");

    SparsityReport report;
    report.edge_count = g.edge_count();
    report.target = 2 * n - 3;
    report.is_sparse = true;

    PebbleGame game(n);
    for (const Edge& e : g.edges()) {  // already lexicographic
        if (!game.insert(e.u, e.v)) {
            report.is_sparse = false;
            report.witness = game.reach(e.u, e.v);
            break;
        }
    }
    report.is_tight = report.is_sparse && report.edge_count == report.target;
    return report;
}

bool laman_check(const Graph& g) { return pebble_sparsity(g).is_tight; }

bool brute_force_laman(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceLimit)
        throw Error(ErrorCode::TooLarge, "enumeration limited to " + std::to_string(kBruteForceLimit) + " vertices");
    if (n < 2) throw Error(ErrorCode::TooFewVertices, "sparsity needs at least 2 vertices");
    if (g.edge_count() != 2 * n - 3) return false;

    std::vector<std::uint32_t> masks;
    masks.reserve(g.edges().size());
    for (const Edge& e : g.edges()) masks.push_back((1u << e.u) | (1u << e.v));

    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const int size = std::popcount(subset);
        if (size < 2) continue;
        int induced = 0;
        for (std::uint32_t m : masks)
            if ((m & subset) == m) ++induced;
        if (induced > 2 * size - 3) return false;
    }
    return true;
}

}  // namespace c3rigid
