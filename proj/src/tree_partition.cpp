#include "c3rigid/tree_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "c3rigid/error.hpp"
#include "c3rigid/sparsity.hpp"

namespace c3rigid {

int TreePartition::tree_of(const Edge& e) const {
    for (int i = 0; i < 3; ++i)
        if (std::binary_search(trees[i].begin(), trees[i].end(), e)) return i;
    return -1;
}

namespace {

int mod3(int i) { return ((i % 3) + 3) % 3; }

// Edge -> tree map plus per-tree vertex incidence counts, updated move by move.
class PartitionBuilder {
public:
    explicit PartitionBuilder(int n) : incidence_(n, {0, 0, 0}) {}

    void grow(int n) { incidence_.resize(n, {0, 0, 0}); }

    void add(int tree, const Edge& e) {
        tree = mod3(tree);
        if (!owner_.emplace(e, tree).second)
            throw Error(ErrorCode::InternalInvariantBroken, "edge assigned twice");
        ++incidence_[e.u][tree];
        ++incidence_[e.v][tree];
    }

    void remove(int tree, const Edge& e) {
        tree = mod3(tree);
        auto it = owner_.find(e);
        if (it == owner_.end() || it->second != tree)
            throw Error(ErrorCode::InternalInvariantBroken, "removed edge is not in the expected tree");
        owner_.erase(it);
        --incidence_[e.u][tree];
        --incidence_[e.v][tree];
    }

    int owner(const Edge& e) const {
        auto it = owner_.find(e);
        if (it == owner_.end()) throw Error(ErrorCode::InternalInvariantBroken, "edge has no tree");
        return it->second;
    }

    bool in_tree(Vertex v, int tree) const { return incidence_[v][mod3(tree)] > 0; }

    int first_tree_of(Vertex v) const {
        for (int i = 0; i < 3; ++i)
            if (in_tree(v, i)) return i;
        throw Error(ErrorCode::InternalInvariantBroken, "vertex in no tree");
    }

    TreePartition result() const {
        TreePartition tp;
        for (const auto& [e, tree] : owner_) tp.trees[tree].push_back(e);  // map order keeps them sorted
        return tp;
    }

private:
    std::map<Edge, int> owner_;
    std::vector<std::array<int, 3>> incidence_;
};

}  // namespace

TreePartition build_tree_partition(const ConstructionSequence& seq) {
    SymGraph current = seq.base;
    if (current.graph().vertex_count() != 3 || current.graph().edge_count() != 3)
        throw Error(ErrorCode::InvalidPartition, "sequence base must be K3");
    const C3Action& base_gamma = current.action();
    PartitionBuilder b(3);
    for (int i = 0; i < 3; ++i) b.add(i, Edge(base_gamma.power(0, i), base_gamma.power(0, i + 1)));

    for (const Move& move : seq.moves) {
        SymGraph next = apply_move(current, move);
        const C3Action& g = next.action();
        const auto [v, w, z] = move.new_vertices;
        b.grow(next.graph().vertex_count());

        switch (move.kind) {
            case MoveKind::VertexAddition: {
                const Vertex v1 = move.anchors[0], v2 = move.anchors[1];
                int l = 0;
                while (l < 3 && !(b.in_tree(v1, l) && b.in_tree(v2, l + 1))) ++l;
                if (l == 3) throw Error(ErrorCode::InternalInvariantBroken, "no tree index for vertex addition");
                b.add(l, {v, v1});
                b.add(l, {z, g.squared(v2)});
                b.add(l + 1, {v, v2});
                b.add(l + 1, {w, g(v1)});
                b.add(l + 2, {w, g(v2)});
                b.add(l + 2, {z, g.squared(v1)});
                break;
            }
            case MoveKind::EdgeSplit: {
                const Vertex v1 = move.anchors[0], v2 = move.anchors[1], v3 = move.anchors[2];
                const int l = b.owner(Edge(v1, v2));
                b.remove(l, {v1, v2});
                b.remove(l + 1, {g(v1), g(v2)});
                b.remove(l + 2, {g.squared(v1), g.squared(v2)});
                b.add(l, {v, v1});
                b.add(l, {v, v2});
                b.add(l + 1, {w, g(v1)});
                b.add(l + 1, {w, g(v2)});
                b.add(l + 2, {z, g.squared(v1)});
                b.add(l + 2, {z, g.squared(v2)});
                if (b.in_tree(v3, l + 1)) {
                    b.add(l, {z, g.squared(v3)});
                    b.add(l + 1, {v, v3});
                    b.add(l + 2, {w, g(v3)});
                } else if (b.in_tree(v3, l + 2)) {
                    b.add(l, {w, g(v3)});
                    b.add(l + 1, {z, g.squared(v3)});
                    b.add(l + 2, {v, v3});
                } else {
                    throw Error(ErrorCode::InternalInvariantBroken, "third split anchor misses both other trees");
                }
                break;
            }
            case MoveKind::DeltaExtension: {
                const Vertex v0 = move.anchors[0];
                const int l = b.first_tree_of(v0);
                b.add(l, {v, v0});
                b.add(l, {v, w});
                b.add(l + 1, {w, g(v0)});
                b.add(l + 1, {w, z});
                b.add(l + 2, {z, g.squared(v0)});
                b.add(l + 2, {z, v});
                break;
            }
        }
        current = std::move(next);
    }
    return b.result();
}

TreePartition relabel_partition(const TreePartition& tp, const std::vector<Vertex>& relabel) {
    TreePartition out;
    for (int i = 0; i < 3; ++i) {
        for (const Edge& e : tp.trees[i]) out.trees[i].emplace_back(relabel[e.u], relabel[e.v]);
        std::sort(out.trees[i].begin(), out.trees[i].end());
    }
    return out;
}

bool PartitionReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PartitionCheck& c) { return c.passed; });
}

const PartitionCheck& PartitionReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw Error(ErrorCode::InternalInvariantBroken, "no check named " + name);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Connected and acyclic on its incident vertices.
bool is_tree(int n, const std::vector<Edge>& edges) {
    if (edges.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> touched(n, false);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) return false;
        touched[e.u] = touched[e.v] = true;
        const int a = find_root(parent, e.u), c = find_root(parent, e.v);
        if (a == c) return false;
        parent[a] = c;
    }
    const auto vertices = std::count(touched.begin(), touched.end(), true);
    return static_cast<std::size_t>(vertices) == edges.size() + 1;
}

}  // namespace

PartitionReport verify_tree_partition(const SymGraph& sg, const TreePartition& tp) {
    const Graph& g = sg.graph();
    const int n = g.vertex_count();
    PartitionReport report;

    {
        std::vector<Edge> all;
        for (const auto& t : tp.trees) all.insert(all.end(), t.begin(), t.end());
        std::sort(all.begin(), all.end());
        const bool same = std::equal(all.begin(), all.end(), g.edges().begin(), g.edges().end());
        report.checks.push_back({"partition", same, same ? "" : "tree edges do not partition E(G)"});
    }
    {
        std::string detail;
        for (int i = 0; i < 3; ++i)
            if (!is_tree(n, tp.trees[i])) detail += "T" + std::to_string(i) + " is not a tree; ";
        report.checks.push_back({"trees", detail.empty(), detail});
    }
    {
        std::vector<std::array<bool, 3>> member(n, {false, false, false});
        for (int i = 0; i < 3; ++i)
            for (const Edge& e : tp.trees[i])
                if (e.u >= 0 && e.v < n) member[e.u][i] = member[e.v][i] = true;
        std::string detail;
        for (Vertex v = 0; v < n; ++v) {
            const int count = member[v][0] + member[v][1] + member[v][2];
            if (count != 2) {
                detail = "vertex " + std::to_string(v) + " lies in " + std::to_string(count) + " trees";
                break;
            }
        }
        report.checks.push_back({"two_per_vertex", detail.empty(), detail});
    }
    {
        std::string detail;
        if (!sg.has_action()) {
            detail = "graph carries no c3 action";
        } else {
            const C3Action& gamma = sg.action();
            for (int i = 0; i < 3 && detail.empty(); ++i) {
                std::vector<Edge> image;
                for (const Edge& e : tp.trees[i]) {
                    if (e.u < 0 || e.v >= n) {
                        detail = "edge out of range";
                        break;
                    }
                    image.push_back(gamma(e));
                }
                std::sort(image.begin(), image.end());
                if (detail.empty() && image != tp.trees[(i + 1) % 3])
                    detail = "gamma(T" + std::to_string(i) + ") != T" + std::to_string((i + 1) % 3);
            }
        }
        report.checks.push_back({"equivariant", detail.empty(), detail});
    }
    {
        // A 3Tree2 partition of a (2,3)-sparse graph is always proper.
        const bool sparse = n >= 2 && pebble_sparsity(g).is_sparse;
        report.checks.push_back({"proper", sparse, sparse ? "" : "graph is not (2,3)-sparse"});
    }
    return report;
}

}  // namespace c3rigid
