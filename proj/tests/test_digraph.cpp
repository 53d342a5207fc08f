#include "support.hpp"

#include <doctest.h>

using namespace pasting;

TEST_CASE("acyclicity") {
    DiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(is_acyclic(g));
    g.add_edge(2, 0);
    CHECK_FALSE(is_acyclic(g));
    CHECK_THROWS(g.add_edge(0, 5));
}

TEST_CASE("topological sorts come in lexicographic order") {
    DiGraph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    auto sorts = all_topological_sorts(g);
    REQUIRE(sorts.size() == 8);
    CHECK(sorts.front() == std::vector<int>{0, 1, 2, 3});
    CHECK(std::is_sorted(sorts.begin(), sorts.end()));
    CHECK(all_topological_sorts(g, 2).size() == 2);
}

TEST_CASE("cyclic graphs have no sorts") {
    DiGraph g(2);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(count_topological_sorts(g) == 0);
}

TEST_CASE("sort enumeration matches permutation oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto dag = testing::random_dag(rng, 7);
        auto sorts = all_topological_sorts(dag.graph);
        auto oracle = testing::brute_force_sorts(dag.graph);
        CHECK(sorts == oracle);
    }
}

TEST_CASE("contraction places the new vertex at the least member") {
    // 0 -> 1 -> 2 and 0 -> 2: contracting {0, 2} closes a cycle through 1.
    DiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    Contraction c = contract(g, {0, 2});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.contracted == 0);
    CHECK_FALSE(is_acyclic(c.graph));
    CHECK_FALSE(is_path_induced(g, {0, 2}));
    CHECK(is_path_induced(g, {0, 1}));
    CHECK_THROWS(contract(g, {}));
    DiGraph h(3);
    h.add_edge(0, 1);
    CHECK_THROWS(contract(h, {0, 2}));
}

TEST_CASE("dot output names vertices") {
    DiGraph g(2);
    g.add_edge(0, 1);
    std::string dot = to_dot(g, {"a", "b"}, "G");
    CHECK(dot.find("v0 -> v1;") != std::string::npos);
    CHECK(dot.find("label=\"b\"") != std::string::npos);
}
