#include "doctest.h"

#include <set>

#include "thickness/drawing.hpp"
#include "thickness/errors.hpp"
#include "thickness/incidence_graph.hpp"

using namespace thickness;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("G_3(4) is the cube") {
    IncidenceGraph g = generate_incidence_graph(3, 4);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    for (int d : g.degrees()) CHECK(d == 3);
    CHECK(g.is_bipartite_by_cardinality());
    CHECK(is_planar(g));
}

TEST_CASE("small generator examples") {
    IncidenceGraph star = generate_incidence_graph(3, 3);
    CHECK(star.vertex_count() == 4);
    CHECK(star.edge_count() == 3);

    IncidenceGraph cycle = generate_incidence_graph(2, 3);
    CHECK(cycle.vertex_count() == 6);
    CHECK(cycle.edge_count() == 6);
    for (int d : cycle.degrees()) CHECK(d == 2); // 6-cycle

    IncidenceGraph g35 = generate_incidence_graph(3, 5);
    CHECK(g35.vertex_count() == 15);
    CHECK(g35.edge_count() == 30);
}

TEST_CASE("generator rejects bad parameters") {
    CHECK_THROWS_AS((void)generate_incidence_graph(1, 3), Error);
    CHECK_THROWS_AS((void)generate_incidence_graph(4, 3), Error);
    CHECK_THROWS_AS((void)generate_incidence_graph(3, 65), Error);
    CHECK_THROWS_AS((void)generate_incidence_graph(30, 64), Error);
}

TEST_CASE("tripleton listing in canonical order") {
    auto list4 = tripletons(generate_incidence_graph(3, 4));
    REQUIRE(list4.size() == 4);
    CHECK(list4[0].members() == std::vector<int>{0, 1, 2});
    CHECK(list4[1].members() == std::vector<int>{0, 1, 3});
    CHECK(list4[2].members() == std::vector<int>{0, 2, 3});
    CHECK(list4[3].members() == std::vector<int>{1, 2, 3});

    auto list3 = tripletons(generate_incidence_graph(3, 3));
    REQUIRE(list3.size() == 1);
    CHECK(list3[0].members() == std::vector<int>{0, 1, 2});

    auto pairs = tripletons(generate_incidence_graph(2, 3));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].members() == std::vector<int>{0, 1});
    CHECK(pairs[1].members() == std::vector<int>{0, 2});
    CHECK(pairs[2].members() == std::vector<int>{1, 2});
}

TEST_CASE("counts, degrees, determinism across a parameter grid") {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 2; k <= n; ++k) {
            IncidenceGraph g = generate_incidence_graph(k, n);
            CHECK(g.vertex_count() == n + binom(n, k));
            CHECK(g.edge_count() == k * binom(n, k));
            auto deg = g.degrees();
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (v < n) {
                    CHECK(deg[v] == binom(n - 1, k - 1));
                } else {
                    CHECK(deg[v] == k);
                }
            }
            CHECK(g.is_bipartite_by_cardinality());
            // Every edge joins a singleton to a k-ton containing it.
            for (const EdgeRef& e : g.edges) {
                CHECK(g.vertices[e.u].cardinality() == 1);
                CHECK(g.vertices[e.v].cardinality() == k);
                CHECK(g.vertices[e.v].contains(g.singleton_member(e.u)));
            }
            // Simple: no repeated edges.
            std::set<std::pair<int, int>> seen;
            for (const EdgeRef& e : g.edges) CHECK(seen.insert({e.u, e.v}).second);

            IncidenceGraph again = generate_incidence_graph(k, n);
            CHECK(again.vertices.size() == g.vertices.size());
            for (std::size_t i = 0; i < g.vertices.size(); ++i) CHECK(again.vertices[i] == g.vertices[i]);
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                CHECK(again.edges[i].u == g.edges[i].u);
                CHECK(again.edges[i].v == g.edges[i].v);
            }
        }
    }
}

TEST_CASE("subset vertex ordering is lexicographic") {
    CHECK(SubsetVertex::of({0, 1, 2}) < SubsetVertex::of({0, 1, 3}));
    CHECK(SubsetVertex::of({0, 1, 3}) < SubsetVertex::of({0, 2, 3}));
    CHECK(SubsetVertex::of({0, 2, 3}) < SubsetVertex::of({1, 2, 3}));
    CHECK_FALSE(SubsetVertex::of({1, 2, 3}) < SubsetVertex::of({0, 1, 2}));
}
