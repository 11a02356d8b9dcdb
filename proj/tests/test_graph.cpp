#include <doctest.h>

#include "c3rigid/error.hpp"
#include "c3rigid/graph.hpp"
#include "c3rigid/graph_io.hpp"
#include "support.hpp"

using namespace c3rigid;
using namespace c3rigid::testing;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("parse K3 with a 3-cycle") {
    const SymGraph sg = parse_graph(R"({"vertices":3, "edges":[[0,1],[1,2],[2,0]], "c3":[1,2,0]})");
    CHECK(sg.graph().vertex_count() == 3);
    CHECK(sg.graph().edge_count() == 3);
    CHECK(sg.action()(0) == 1);
    CHECK(sg.action().squared(0) == 2);
    CHECK(sg == k3());
}

TEST_CASE("parse the triangular prism") {
    const SymGraph sg = parse_graph(
        R"({"vertices":6, "edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]], "c3":[1,2,0,4,5,3]})");
    CHECK(sg == prism());
}

TEST_CASE("parse rejects a transposition") {
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[[0,1],[1,2],[2,0]], "c3":[1,0,2]})"); }) ==
          ErrorCode::NotOrderThree);
}

TEST_CASE("parse validation errors") {
    CHECK(code_of([] { parse_graph("{"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_graph(R"({"edges":[]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[[0,1,2]]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[[0,5]]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[[1,1]]})"); }) == ErrorCode::LoopOrDuplicateEdge);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[[0,1],[1,0]]})"); }) ==
          ErrorCode::LoopOrDuplicateEdge);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[], "c3":[1,2]})"); }) == ErrorCode::NotAPermutation);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[], "c3":[1,1,0]})"); }) ==
          ErrorCode::NotAPermutation);
    CHECK(code_of([] { parse_graph(R"({"vertices":3, "edges":[], "c3":[0,1,2]})"); }) == ErrorCode::NotOrderThree);
    CHECK(code_of([] { parse_graph(R"({"vertices":4, "edges":[[0,1],[1,2],[2,0],[0,3]], "c3":[1,2,0,3]})"); }) ==
          ErrorCode::NotAnAutomorphism);
}

TEST_CASE("non-automorphism names a witness edge") {
    try {
        parse_graph(R"({"vertices":4, "edges":[[0,1],[1,2],[2,0],[0,3]], "c3":[1,2,0,3]})");
        FAIL("accepted a non-automorphism");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("{0,3}") != std::string::npos);
    }
}

TEST_CASE("graphs without an action and small graphs") {
    const SymGraph sg = parse_graph(R"({"vertices":2, "edges":[[0,1]]})");
    CHECK_FALSE(sg.has_action());
    CHECK(code_of([&] { (void)sg.action(); }) == ErrorCode::MissingAction);
    CHECK(code_of([&] { require_c3(sg); }) == ErrorCode::MissingAction);
}

TEST_CASE("count_fixed examples") {
    CHECK(count_fixed(prism()).joints == 0);
    CHECK(count_fixed(prism()).bars == 0);
    CHECK(count_fixed(k13_hub()).joints == 1);
    CHECK(count_fixed(k13_hub()).bars == 0);
    CHECK(count_fixed(k3()).joints == 0);
    CHECK(count_fixed(k3()).bars == 0);
}

TEST_CASE("orbit examples") {
    const SymGraph pg = prism();
    const C3Action& p = pg.action();
    CHECK(orbit(p, 0) == std::array<Vertex, 3>{0, 1, 2});
    CHECK(orbit(p, 4) == std::array<Vertex, 3>{4, 5, 3});
    CHECK(orbit(k13_hub().action(), 3) == std::array<Vertex, 3>{3, 3, 3});
}

TEST_CASE("orbit cycles and fixed bars need fixed endpoints") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const SymGraph sg = random_tight_symgraph(rng, 3);
        const C3Action& g = sg.action();
        for (Vertex v = 0; v < sg.graph().vertex_count(); ++v) {
            const auto o = orbit(g, v);
            CHECK(orbit(g, o[1]) == std::array<Vertex, 3>{o[1], o[2], o[0]});
        }
        const FixedCounts fc = count_fixed(sg);
        CHECK(fc.joints == 0);
        CHECK(fc.bars == 0);
        CHECK(sg.graph().vertex_count() % 3 == 0);
        CHECK(sg.graph().edge_count() % 3 == 0);
    }
    // An edge between two fixed vertices is a fixed bar.
    const SymGraph two_hubs(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}), C3Action({1, 2, 0, 3, 4}));
    CHECK(count_fixed(two_hubs).joints == 2);
    CHECK(count_fixed(two_hubs).bars == 1);
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const SymGraph sg = random_tight_symgraph(rng, trial % 5);
        CHECK(parse_graph(serialize(sg)) == sg);
    }
    const SymGraph plain(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(parse_graph(serialize(plain)) == plain);
}

TEST_CASE("edge orbits and vertex removal") {
    const SymGraph p = prism();
    CHECK(edge_orbit(p.action(), Edge(0, 3)).size() == 3);
    std::vector<bool> removed{true, true, true, false, false, false};
    std::vector<Vertex> kept;
    const Graph rest = remove_vertices(p.graph(), removed, {}, &kept);
    CHECK(rest.vertex_count() == 3);
    CHECK(rest.edge_count() == 3);
    CHECK(kept == std::vector<Vertex>{3, 4, 5});
}
