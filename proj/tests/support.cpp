#include "support.hpp"

#include <algorithm>

#include "c3rigid/error.hpp"

namespace c3rigid::testing {

namespace {

std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Edge> out;
    for (auto [u, v] : list) out.emplace_back(u, v);
    return out;
}

}  // namespace

SymGraph k3() { return SymGraph(Graph(3, edges_of({{0, 1}, {1, 2}, {2, 0}})), C3Action({1, 2, 0})); }

SymGraph prism() {
    return SymGraph(Graph(6, edges_of({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})),
                    C3Action({1, 2, 0, 4, 5, 3}));
}

SymGraph k33() {
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    return SymGraph(Graph(6, e), C3Action({1, 2, 0, 4, 5, 3}));
}

SymGraph k13_hub() { return SymGraph(Graph(4, edges_of({{0, 3}, {1, 3}, {2, 3}})), C3Action({1, 2, 0, 3})); }

SymGraph k4_c3() { return SymGraph(k4(), C3Action({1, 2, 0, 3})); }

SymGraph octahedron() {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) e.emplace_back(u, v);
    return SymGraph(Graph(6, e), C3Action({1, 2, 0, 4, 5, 3}));
}

Graph k4() { return Graph(4, edges_of({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})); }

Graph random_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph random_graph_m(Rng& rng, int n, int m) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
    return Graph(n, all);
}

Move random_move(Rng& rng, const SymGraph& sg) {
    const Graph& g = sg.graph();
    const int n = g.vertex_count();
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> edge(0, g.edge_count() - 1);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        try {
            Move m;
            switch (kind(rng)) {
                case 0: m = make_vertex_addition(sg, vertex(rng), vertex(rng)); break;
                case 1: {
                    Edge e = g.edges()[edge(rng)];
                    if (rng() & 1) std::swap(e.u, e.v);
                    m = make_edge_split(sg, e.u, e.v, vertex(rng));
                    break;
                }
                default: m = make_delta_extension(sg, vertex(rng)); break;
            }
            (void)apply_move(sg, m);
            return m;
        } catch (const Error&) {
        }
    }
    throw Error(ErrorCode::InternalInvariantBroken, "no valid random move found");
}

SymGraph random_tight_symgraph(Rng& rng, int moves, std::vector<Move>* applied) {
    SymGraph sg = k3_base();
    for (int i = 0; i < moves; ++i) {
        const Move m = random_move(rng, sg);
        sg = apply_move(sg, m);
        if (applied) applied->push_back(m);
    }
    return sg;
}

SymGraph swap_edge_orbit(Rng& rng, const SymGraph& sg) {
    const Graph& g = sg.graph();
    const C3Action& gamma = sg.action();
    const int n = g.vertex_count();
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::uniform_int_distribution<int> edge(0, g.edge_count() - 1);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        const Edge removed = g.edges()[edge(rng)];
        const Vertex a = vertex(rng), b = vertex(rng);
        if (a == b || g.has_edge(a, b)) continue;
        const std::vector<Edge> out_orbit = edge_orbit(gamma, removed);
        const std::vector<Edge> in_orbit = edge_orbit(gamma, Edge(a, b));
        if (out_orbit.size() != in_orbit.size()) continue;
        std::vector<Edge> edges;
        for (const Edge& e : g.edges())
            if (std::find(out_orbit.begin(), out_orbit.end(), e) == out_orbit.end()) edges.push_back(e);
        edges.insert(edges.end(), in_orbit.begin(), in_orbit.end());
        return SymGraph(Graph(n, edges), gamma);
    }
    throw Error(ErrorCode::InternalInvariantBroken, "no orbit swap found");
}

bool laman_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != 2 * n - 3) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) size += (mask >> v) & 1;
        if (size < 2) continue;
        int inside = 0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) ++inside;
        if (inside > 2 * size - 3) return false;
    }
    return true;
}

int integer_rank(std::vector<std::vector<mpz_class>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                m[r][j] = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
                mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

int qsqrt3_rank_by_embedding(const std::vector<std::vector<mpz_class>>& a,
                             const std::vector<std::vector<mpz_class>>& b) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::vector<mpz_class>> big(2 * rows, std::vector<mpz_class>(2 * cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            big[i][j] = a[i][j];
            big[i][j + cols] = 3 * b[i][j];
            big[i + rows][j] = b[i][j];
            big[i + rows][j + cols] = a[i][j];
        }
    }
    return integer_rank(std::move(big)) / 2;
}

}  // namespace c3rigid::testing
