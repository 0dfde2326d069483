#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "thickness/classification.hpp"
#include "thickness/constructions.hpp"
#include "thickness/errors.hpp"

using namespace thickness;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

// Diamond hull: 0 top, 1 right, 2 bottom, 3 left; identity numbering is the
// clockwise numbering from 0.
LayeredDrawing diamond_g34() {
    IncidenceGraph g = generate_incidence_graph(3, 4);
    std::vector<Point> coords = {pt(0, 10), pt(10, 0), pt(0, -10), pt(-10, 0),
                                 pt(0, 0),  pt(0, 0),  pt(0, 0),   pt(0, 0)};
    std::vector<int> layers(g.edge_count(), 0);
    LayeredDrawing d{std::move(g), std::move(coords), std::move(layers), 3};
    // Coherent layering (roles under identity numbering).
    std::map<int, int> seen;
    for (int e = 0; e < d.graph.edge_count(); ++e) d.layers[e] = seen[d.graph.edges[e].v]++;
    return d;
}

} // namespace

TEST_CASE("clockwise numbering of a pentagon and a square") {
    IncidenceGraph g5 = IncidenceGraph::general(5, {});
    std::vector<Point> pentagon = rational_circle_points(5, Rat(10));
    LayeredDrawing d5{g5, pentagon, {}, 1};
    SingletonNumbering n5 = clockwise_numbering(d5, 0);
    // rational_circle_points emits clockwise order already.
    CHECK(n5.order == std::vector<int>{0, 1, 2, 3, 4});

    IncidenceGraph g4 = IncidenceGraph::general(4, {});
    LayeredDrawing square{g4, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {}, 1};
    SingletonNumbering n4 = clockwise_numbering(square, 0);
    CHECK(n4.order == std::vector<int>{0, 3, 2, 1}); // (0,0),(0,1),(1,1),(1,0)

    IncidenceGraph g5b = IncidenceGraph::general(5, {});
    LayeredDrawing bad{g5b, {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)}, {}, 1};
    CHECK_THROWS_WITH_AS((void)clockwise_numbering(bad, 0), doctest::Contains("not-convex-position"),
                         Error);
}

TEST_CASE("edge roles under identity and shifted numberings") {
    LayeredDrawing d = diamond_g34();
    SingletonNumbering identity = clockwise_numbering(d, 0);
    REQUIRE(identity.order == std::vector<int>{0, 1, 2, 3});
    std::vector<EdgeRole> roles = edge_roles(d.graph, identity);

    // Tripleton {0,1,2} (vertex 4): edge to 0 low, 1 middle, 2 high.
    for (int e = 0; e < d.graph.edge_count(); ++e) {
        const EdgeRef& edge = d.graph.edges[e];
        if (edge.v != 4) continue;
        if (edge.u == 0) CHECK(roles[e] == EdgeRole::Low);
        if (edge.u == 1) CHECK(roles[e] == EdgeRole::Middle);
        if (edge.u == 2) CHECK(roles[e] == EdgeRole::High);
    }

    // Low-edge singletons over all four tripletons: {0,0,0,1}.
    std::vector<int> lows;
    for (int e = 0; e < d.graph.edge_count(); ++e)
        if (roles[e] == EdgeRole::Low) lows.push_back(d.graph.edges[e].u);
    std::sort(lows.begin(), lows.end());
    CHECK(lows == std::vector<int>{0, 0, 0, 1});

    // Starting the numbering at 2 makes 2 the smallest label of {0,1,2}.
    SingletonNumbering shifted = clockwise_numbering(d, 2);
    std::vector<EdgeRole> shifted_roles = edge_roles(d.graph, shifted);
    for (int e = 0; e < d.graph.edge_count(); ++e) {
        const EdgeRef& edge = d.graph.edges[e];
        if (edge.v == 4 && edge.u == 2) CHECK(shifted_roles[e] == EdgeRole::Low);
    }

    // Rotating the start flips at least one role.
    bool any_flip = false;
    for (int e = 0; e < d.graph.edge_count(); ++e) any_flip |= (roles[e] != shifted_roles[e]);
    CHECK(any_flip);

    CHECK_THROWS_AS((void)edge_roles(generate_incidence_graph(2, 4), identity), Error);
}

TEST_CASE("role partition is one low, one middle, one high per tripleton") {
    IncidenceGraph g = generate_incidence_graph(3, 6);
    std::vector<Point> coords(g.vertex_count(), pt(0, 0));
    auto circle = rational_circle_points(6, Rat(10));
    std::copy(circle.begin(), circle.end(), coords.begin());
    LayeredDrawing d{g, coords, std::vector<int>(g.edge_count(), 0), 1};
    SingletonNumbering numbering = clockwise_numbering(d, 0);
    std::vector<EdgeRole> roles = edge_roles(g, numbering);
    std::map<int, std::set<EdgeRole>> per_tripleton;
    std::map<int, std::array<int, 3>> member_by_role;
    for (int e = 0; e < g.edge_count(); ++e) {
        CHECK(per_tripleton[g.edges[e].v].insert(roles[e]).second);
        member_by_role[g.edges[e].v][static_cast<int>(roles[e])] = numbering.position(g.edges[e].u);
    }
    for (const auto& [kton, role_set] : per_tripleton) CHECK(role_set.size() == 3);
    for (const auto& [kton, positions] : member_by_role) {
        CHECK(positions[0] < positions[1]); // low before middle
        CHECK(positions[1] < positions[2]); // middle before high
    }
}

TEST_CASE("coherence detection") {
    DrawingResult fixture = two_tripleton_inner_fixture(CrossingCharacter::Convex);
    REQUIRE(fixture.verified);
    SingletonNumbering numbering = clockwise_numbering(fixture.drawing, 0);
    CHECK(is_convex_drawing(fixture.drawing));
    CHECK(is_coherent(fixture.drawing, numbering));

    // Moving one low edge into the middle layer breaks coherence.
    LayeredDrawing broken = fixture.drawing;
    broken.layers[0] = 1;
    CHECK_FALSE(is_coherent(broken, numbering));

    // Four layers cannot be a convex drawing.
    LayeredDrawing four = fixture.drawing;
    four.layer_count = 4;
    four.layers[0] = 3;
    CHECK_FALSE(is_convex_drawing(four));

    auto starts = coherent_starts(fixture.drawing);
    CHECK(std::find(starts.begin(), starts.end(), 0) != starts.end());
}

TEST_CASE("inner outer classification") {
    LayeredDrawing d = diamond_g34();
    // All tripletons currently at the hull centroid region: inner.
    for (int v : kton_indices(d.graph)) d.coords[v] = pt((v - 5), (6 - v));
    CHECK(inner_outer(d) == InnerOuter::Inner);

    for (int v : kton_indices(d.graph)) d.coords[v] = pt(30 + v, 40 - v);
    CHECK(inner_outer(d) == InnerOuter::Outer);

    d.coords[4] = pt(1, 1);
    CHECK(inner_outer(d) == InnerOuter::Mixed);

    d.coords[4] = pt(5, 5); // on the hull edge from (0,10) to (10,0)
    CHECK(inner_outer(d) == InnerOuter::Degenerate);
}

TEST_CASE("inner outer on random strictly-sided samples") {
    std::mt19937_64 rng(6060);
    std::uniform_int_distribution<int> weight(1, 9);
    LayeredDrawing base = diamond_g34();
    auto ktons = kton_indices(base.graph);
    for (int round = 0; round < 300; ++round) {
        LayeredDrawing d = base;
        bool outside = round % 2;
        for (int v : ktons) {
            if (outside) {
                // Far samples beyond the hull radius.
                std::uniform_int_distribution<int> far(20, 90);
                int x = far(rng), y = far(rng);
                d.coords[v] = pt((rng() % 2 ? x : -x), (rng() % 2 ? y : -y));
            } else {
                // Positive convex combination of the four corners.
                Rat w0(weight(rng)), w1(weight(rng)), w2(weight(rng)), w3(weight(rng));
                Rat total = w0 + w1 + w2 + w3;
                d.coords[v] = Point{(w1 * 10 - w3 * 10) / total, (w0 * 10 - w2 * 10) / total};
            }
        }
        CHECK(inner_outer(d) == (outside ? InnerOuter::Outer : InnerOuter::Inner));
    }
}

TEST_CASE("tripleton types follow the paper's wedge geometry") {
    LayeredDrawing d = diamond_g34();
    SingletonNumbering numbering = clockwise_numbering(d, 0);

    // Tripleton {0,1,2} beyond the arc between singletons 1 and 2: the
    // clockwise reading after the reflex gap is High, Low, Middle = 201.
    d.coords[4] = pt(10, -10);
    TripletonType t = tripleton_type(d, numbering, 4);
    CHECK(t.symbol() == "201");

    // Its low edge (to singleton 0) crosses the hull between the middle and
    // high singletons 1 and 2, the forced-crossing geometry of type 201.
    Segment low(d.coords[4], d.coords[0]);
    Segment arc_12(d.coords[1], d.coords[2]);
    CHECK(segment_relation(low, arc_12) == SegmentRelation::ProperCrossing);

    // An interior tripleton has no reflex gap.
    d.coords[4] = pt(1, 1);
    CHECK_THROWS_WITH_AS((void)tripleton_type(d, numbering, 4), doctest::Contains("no-reflex-angle"),
                         Error);
}

TEST_CASE("tripleton type is invariant under translation, rotation, scaling") {
    LayeredDrawing d = diamond_g34();
    d.coords[4] = pt(10, -10);
    d.coords[5] = pt(-4, 17);
    d.coords[6] = pt(-13, -9);
    d.coords[7] = pt(3, -21);
    SingletonNumbering numbering = clockwise_numbering(d, 0);
    std::vector<TripletonType> base;
    for (int v : kton_indices(d.graph)) base.push_back(tripleton_type(d, numbering, v));

    auto transform = [](const Point& p) {
        // rotate by the rational 3-4-5 angle, scale by 7/3, translate
        Point r{p.x * Rat(3, 5) - p.y * Rat(4, 5), p.x * Rat(4, 5) + p.y * Rat(3, 5)};
        return Point{r.x * Rat(7, 3) + 11, r.y * Rat(7, 3) - 4};
    };
    LayeredDrawing mapped = d;
    for (Point& p : mapped.coords) p = transform(p);
    SingletonNumbering mapped_numbering = clockwise_numbering(mapped, 0);
    int i = 0;
    for (int v : kton_indices(mapped.graph))
        CHECK(tripleton_type(mapped, mapped_numbering, v) == base[i++]);
}

TEST_CASE("reversing the numbering swaps low and high digits") {
    LayeredDrawing d = diamond_g34();
    d.coords[4] = pt(10, -10);
    SingletonNumbering forward = clockwise_numbering(d, 0);
    TripletonType t = tripleton_type(d, forward, 4);

    // Mirror the drawing left-right: hull order reverses, so the same
    // tripleton reads with Low and High exchanged and the sweep reversed.
    LayeredDrawing mirrored = d;
    for (Point& p : mirrored.coords) p.x = -p.x;
    SingletonNumbering mirror_numbering = clockwise_numbering(mirrored, 0);
    TripletonType mt = tripleton_type(mirrored, mirror_numbering, 4);
    std::array<int, 3> expected;
    for (int i = 0; i < 3; ++i) expected[i] = 2 - t.digits[2 - i];
    CHECK(mt.digits == expected);
}

TEST_CASE("drawing type uniformity") {
    LayeredDrawing d = diamond_g34();
    SingletonNumbering numbering = clockwise_numbering(d, 0);
    // A single tripleton drawing is uniformly of its own type.
    IncidenceGraph g3 = generate_incidence_graph(3, 3);
    std::vector<Point> coords = {pt(0, 10), pt(10, -6), pt(-10, -6), pt(0, -40)};
    LayeredDrawing single{g3, coords, {0, 1, 2}, 3};
    SingletonNumbering n3 = clockwise_numbering(single, 0);
    DrawingType dt = drawing_type(single, n3);
    CHECK(dt.uniform);

    d.coords[4] = pt(10, -10);
    d.coords[5] = pt(-4, 17);
    d.coords[6] = pt(-13, -9);
    d.coords[7] = pt(3, -21);
    DrawingType mixed = drawing_type(d, numbering);
    // These four placements do not share one type.
    std::set<std::string> symbols;
    for (int v : kton_indices(d.graph)) symbols.insert(tripleton_type(d, numbering, v).symbol());
    CHECK(mixed.uniform == (symbols.size() == 1));
}

TEST_CASE("crossing character of the two fixtures") {
    DrawingResult convex = two_tripleton_inner_fixture(CrossingCharacter::Convex);
    REQUIRE(convex.verified);
    SingletonNumbering numbering = clockwise_numbering(convex.drawing, 0);
    CHECK(crossing_character(convex.drawing, numbering, 6, 7) == CrossingCharacter::Convex);
    CHECK(is_coherent(convex.drawing, numbering));
    CHECK(inner_outer(convex.drawing) == InnerOuter::Inner);

    DrawingResult concave = two_tripleton_inner_fixture(CrossingCharacter::Concave);
    REQUIRE(concave.verified);
    SingletonNumbering n2 = clockwise_numbering(concave.drawing, 0);
    CHECK(crossing_character(concave.drawing, n2, 6, 7) == CrossingCharacter::Concave);
    CHECK(is_coherent(concave.drawing, n2));
    CHECK(inner_outer(concave.drawing) == InnerOuter::Inner);
}

TEST_CASE("crossing character rejects non-interleaved tripletons") {
    // Tripletons {0,1,2} and {3,4,5}: a < c < d, no interleaving.
    IncidenceGraph g;
    g.n = 6;
    g.k = 3;
    for (int i = 0; i < 6; ++i) g.vertices.push_back(SubsetVertex::singleton(i));
    g.vertices.push_back(SubsetVertex::of({0, 1, 2}));
    g.vertices.push_back(SubsetVertex::of({3, 4, 5}));
    g.edges = {{0, 6}, {1, 6}, {2, 6}, {3, 7}, {4, 7}, {5, 7}};
    std::vector<Point> coords = rational_circle_points(6, Rat(100));
    coords.push_back(pt(40, 20));
    coords.push_back(pt(-30, -20));
    LayeredDrawing d{g, coords, {0, 1, 2, 0, 1, 2}, 3};
    SingletonNumbering numbering = clockwise_numbering(d, 0);
    if (is_coherent(d, numbering) && inner_outer(d) == InnerOuter::Inner) {
        CHECK_THROWS_WITH_AS((void)crossing_character(d, numbering, 6, 7),
                             doctest::Contains("precondition"), Error);
    } else {
        // Fall back: the precondition error must mention the failing check.
        CHECK_THROWS_AS((void)crossing_character(d, numbering, 6, 7), Error);
    }
}

TEST_CASE("random coherent inner two-tripleton configurations obey the one-crossing lemma") {
    std::mt19937_64 rng(112233);
    std::uniform_int_distribution<int> weight(1, 99);
    int accepted = 0;
    int convex_seen = 0, concave_seen = 0;
    auto singles = rational_circle_points(6, Rat(100));
    while (accepted < 2'000) {
        IncidenceGraph g;
        g.n = 6;
        g.k = 3;
        for (int i = 0; i < 6; ++i) g.vertices.push_back(SubsetVertex::singleton(i));
        g.vertices.push_back(SubsetVertex::of({0, 1, 2})); // a=0, c=2
        g.vertices.push_back(SubsetVertex::of({1, 3, 5})); // d=1, f=5 -> 0<1<2<5
        g.edges = {{0, 6}, {1, 6}, {2, 6}, {1, 7}, {3, 7}, {5, 7}};
        std::vector<Point> coords = singles;
        for (int t = 0; t < 2; ++t) {
            Rat sx(0), sy(0), total(0);
            for (const Point& p : singles) {
                Rat w(weight(rng));
                sx += p.x * w;
                sy += p.y * w;
                total += w;
            }
            coords.push_back(Point{sx / total, sy / total});
        }
        LayeredDrawing d{g, coords, {0, 1, 2, 0, 1, 2}, 3};
        SingletonNumbering numbering = clockwise_numbering(d, 0);
        if (!is_coherent(d, numbering)) continue;
        if (inner_outer(d) != InnerOuter::Inner) continue;
        ++accepted;
        CrossingCharacter c = crossing_character(d, numbering, 6, 7); // must not throw
        (c == CrossingCharacter::Convex ? convex_seen : concave_seen)++;
    }
    CHECK(convex_seen > 0);
    CHECK(concave_seen > 0);
}

TEST_CASE("classify_drawing aggregates") {
    DrawingResult fixture = two_tripleton_inner_fixture(CrossingCharacter::Convex);
    ClassificationReport report = classify_drawing(fixture.drawing, 0);
    CHECK(report.convex);
    CHECK(report.coherent);
    CHECK(report.inner_outer_status == InnerOuter::Inner);
    CHECK(report.types.size() == 2);
    CHECK_FALSE(report.types[0].has_value()); // interior tripletons have no reflex gap
}
