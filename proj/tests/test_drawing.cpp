#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "thickness/constructions.hpp"
#include "thickness/drawing.hpp"
#include "thickness/errors.hpp"

using namespace thickness;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

LayeredDrawing k4_convex_one_layer() {
    IncidenceGraph g = IncidenceGraph::complete(4);
    LayeredDrawing d{g, {pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)},
                     std::vector<int>(6, 0), 1};
    return d;
}

} // namespace

TEST_CASE("validate_drawing accepts the nested-squares cube") {
    DrawingResult cube = g3_planar_drawing_n4();
    CHECK(validate_drawing(cube.drawing).valid());
}

TEST_CASE("validate_drawing reports duplicates and vertex-on-edge incidences") {
    IncidenceGraph g = IncidenceGraph::general(3, {{0, 1}, {1, 2}});
    LayeredDrawing dup{g, {pt(0, 0), pt(1, 1), pt(0, 0)}, {0, 0}, 1};
    auto report = validate_drawing(dup);
    CHECK_FALSE(report.valid());
    REQUIRE(report.duplicate_coordinates.size() == 1);
    CHECK(report.duplicate_coordinates[0] == std::array<int, 2>{0, 2});

    // Path a-b-c drawn collinear with b between: the two edges share b and
    // overlap nowhere, so the drawing is valid.
    LayeredDrawing path{g, {pt(0, 0), pt(1, 0), pt(2, 0)}, {0, 0}, 1};
    CHECK(validate_drawing(path).valid());

    // A third vertex in the interior of an edge is invalid.
    IncidenceGraph g2 = IncidenceGraph::general(3, {{0, 1}});
    LayeredDrawing cover{g2, {pt(0, 0), pt(2, 0), pt(1, 0)}, {0}, 1};
    auto report2 = validate_drawing(cover);
    CHECK_FALSE(report2.valid());
    REQUIRE(report2.vertex_on_edge.size() == 1);
    CHECK(report2.vertex_on_edge[0] == std::array<int, 2>{2, 0});
}

TEST_CASE("layer crossings: K4 placements") {
    LayeredDrawing convex = k4_convex_one_layer();
    auto report = layer_crossings(convex);
    REQUIRE(report.crossings.size() == 1); // the two diagonals

    // Interior fourth vertex: planar straight-line K4.
    IncidenceGraph g = IncidenceGraph::complete(4);
    LayeredDrawing planar{g, {pt(0, 0), pt(12, 0), pt(6, 10), pt(6, 4)},
                          std::vector<int>(6, 0), 1};
    CHECK(layer_crossings(planar).crossings.empty());

    // Diagonals moved to their own layer.
    LayeredDrawing split = convex;
    split.layer_count = 2;
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRef& edge = g.edges[e];
        bool diagonal = (edge.u == 0 && edge.v == 2) || (edge.u == 1 && edge.v == 3);
        split.layers[e] = diagonal ? 1 : 0;
    }
    CHECK(layer_crossings(split).crossings.empty());
    CHECK(split.used_layer_count() == 2);

    LayeredDrawing invalid = convex;
    invalid.coords[1] = invalid.coords[0];
    CHECK_THROWS_AS((void)layer_crossings(invalid), Error);
}

TEST_CASE("geometric thickness witness verification and monotonicity") {
    DrawingResult cube = g3_planar_drawing_n4();
    CHECK(verify_geometric_thickness_witness(cube.drawing, 1));
    for (int t = 1; t <= 5; ++t) CHECK(verify_geometric_thickness_witness(cube.drawing, t));
    CHECK_FALSE(verify_geometric_thickness_witness(k4_convex_one_layer(), 1));
}

TEST_CASE("book crossings") {
    IncidenceGraph c6 = IncidenceGraph::cycle(6);
    BookLayout cyclic{c6, {0, 1, 2, 3, 4, 5}, std::vector<int>(6, 0)};
    CHECK(book_crossings(cyclic).empty());

    // K4 on one page: exactly one crossing pair for every circular order.
    IncidenceGraph k4 = IncidenceGraph::complete(4);
    std::vector<int> rest = {1, 2, 3};
    do {
        std::vector<int> order = {0, rest[0], rest[1], rest[2]};
        BookLayout bl{k4, order, std::vector<int>(6, 0)};
        CHECK(book_crossings(bl).size() == 1);
    } while (std::next_permutation(rest.begin(), rest.end()));

    // Splitting the crossing pair onto another page clears it.
    BookLayout split{k4, {0, 1, 2, 3}, {0, 0, 0, 0, 0, 0}};
    auto crossings = book_crossings(split);
    REQUIRE(crossings.size() == 1);
    split.pages[crossings[0][0]] = 1;
    CHECK(book_crossings(split).empty());
    CHECK(verify_book_thickness_witness(split, 2));
    CHECK_FALSE(verify_book_thickness_witness(split, 1));
}

TEST_CASE("planarity") {
    CHECK(is_planar(IncidenceGraph::complete(4)));
    CHECK_FALSE(is_planar(IncidenceGraph::complete(5))); // Euler: 10 > 9
    CHECK(is_planar(generate_incidence_graph(3, 4)));    // cube
    CHECK_FALSE(is_planar(generate_incidence_graph(3, 6)));
    // K5 minus an edge is planar and passes the Euler shortcut.
    IncidenceGraph k5 = IncidenceGraph::complete(5);
    k5.edges.pop_back();
    CHECK(is_planar(k5));
    // K3,3: Euler bound passes (9 <= 12) but Boyer-Myrvold rejects.
    IncidenceGraph k33 = IncidenceGraph::general(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(is_planar(k33));
}

TEST_CASE("thickness layering verification") {
    LayeringResult layering = thickness3_layering(6);
    CHECK(layering.verified);
    CHECK(verify_thickness_layering(layering.graph, layering.layers, 3));

    IncidenceGraph k5 = IncidenceGraph::complete(5);
    CHECK_FALSE(verify_thickness_layering(k5, std::vector<int>(10, 0), 1));

    IncidenceGraph forest = IncidenceGraph::general(5, {{0, 1}, {0, 2}, {3, 4}});
    CHECK(verify_thickness_layering(forest, std::vector<int>(3, 0), 1));

    CHECK_THROWS_AS((void)verify_thickness_layering(k5, std::vector<int>(3, 0), 2), Error);
}

TEST_CASE("layer and book crossings agree for convex-position drawings") {
    std::mt19937_64 rng(13131);
    std::uniform_int_distribution<int> vertices(4, 9);
    std::uniform_int_distribution<int> layer_of(0, 2);
    for (int round = 0; round < 200; ++round) {
        int nv = vertices(rng);
        std::vector<EdgeRef> edges;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (rng() % 2) edges.push_back({i, j});
        if (edges.empty()) continue;
        IncidenceGraph g = IncidenceGraph::general(nv, edges);
        // Circle points in clockwise order; same circular order as pages.
        std::vector<Point> coords = rational_circle_points(nv, Rat(40));
        std::vector<int> layers(g.edge_count());
        for (int& l : layers) l = layer_of(rng);
        LayeredDrawing d{g, coords, layers, 3};
        BookLayout bl{g, [nv] {
                          std::vector<int> order(nv);
                          for (int i = 0; i < nv; ++i) order[i] = i;
                          return order;
                      }(),
                      layers};

        auto geometric = layer_crossings(d);
        auto combinatorial = book_crossings(bl);
        std::set<std::pair<int, int>> geo_set, book_set;
        for (const auto& c : geometric.crossings) geo_set.insert({c[0], c[1]});
        for (const auto& c : combinatorial) book_set.insert({c[0], c[1]});
        REQUIRE(geo_set == book_set);
    }
}
