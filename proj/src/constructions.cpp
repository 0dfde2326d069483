#include "thickness/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "thickness/errors.hpp"

namespace thickness {

LayeringResult thickness3_layering(int n) {
    if (n < 3) fail(Errc::invalid_parameters, "n must be at least 3");
    IncidenceGraph g = generate_incidence_graph(3, n);
    std::vector<int> layers(g.edge_count(), 0);
    // Edges are grouped per tripleton with members ascending, so the rank of
    // the singleton inside its tripleton is the role: 0 low, 1 middle, 2 high.
    std::map<int, int> seen; // kton vertex -> edges assigned so far
    for (int e = 0; e < g.edge_count(); ++e) layers[e] = seen[g.edges[e].v]++;
    LayeringResult result{std::move(g), std::move(layers), false};
    result.verified = verify_thickness_layering(result.graph, result.layers, 3);
    return result;
}

namespace {

DrawingResult finish(LayeredDrawing d, std::string note = {}) {
    DrawingResult result{std::move(d), false, {}, std::move(note)};
    result.report = validate_drawing(result.drawing);
    if (result.report.valid()) result.report = layer_crossings(result.drawing);
    result.verified = result.report.crossing_free() &&
                      result.drawing.used_layer_count() <= result.drawing.layer_count;
    return result;
}

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

} // namespace

DrawingResult g3_planar_drawing_n4() {
    IncidenceGraph g = generate_incidence_graph(3, 4);
    // Vertices: singletons 0..3, then {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}.
    // Nested squares: outer 4-cycle 0-{012}-1-{013}, inner 4-cycle
    // {023}-2-{123}-3, spokes between them.
    std::vector<Point> coords = {
        pt(-600, -600), // 0
        pt(600, 600),   // 1
        pt(200, -200),  // 2
        pt(-200, 200),  // 3
        pt(600, -600),  // {0,1,2}
        pt(-600, 600),  // {0,1,3}
        pt(-200, -200), // {0,2,3}
        pt(200, 200),   // {1,2,3}
    };
    LayeredDrawing d{std::move(g), std::move(coords), {}, 1};
    d.layers.assign(d.graph.edge_count(), 0);
    return finish(std::move(d));
}

namespace {

// ---------------------------------------------------------------------------
// Clustered drawings: four inner singletons and every tripleton live in a
// small central cluster, the remaining singletons sit on a circle of radius
// kFarScale, paired antipodally, one layer per pair. Inside the cluster a
// pair layer's edges are nearly parallel to the pair axis, so distinct
// transverse coordinates keep the layer crossing-free; distinctness comes
// from a per-vertex rational jitter far larger than the segments' in-cluster
// deviation (cluster radius^2 / kFarScale).
// ---------------------------------------------------------------------------

constexpr long long kFarScale = 1'000'000'000'000'000LL; // 1e15
constexpr long long kJitterDenomX = 10'007;
constexpr long long kJitterDenomY = 10'009;

struct ClusterPlan {
    std::vector<int> inner;  // ground members, ascending (size 4)
    std::vector<int> outer;  // ground members, ascending
    int pair_count = 0;      // outer.size() / 2
};

// Direction of pair q as an exact rational unit vector; antipodes handle the
// opposite corners. Tangent half-angle t spreads the axes from (1,0) to
// (0,1), so two pairs sit on perpendicular diagonals (the large square).
Point pair_direction(int q, int pair_count) {
    Rat t(q, std::max(pair_count - 1, 1));
    Rat denom = 1 + t * t;
    return Point{(1 - t * t) / denom, 2 * t / denom};
}

// Inner-cube template over the four inner singletons g0..g3 (values are the
// inner members in ascending order).
const Point kInnerSingleton[4] = {pt(-600, -600), pt(600, 600), pt(200, -200), pt(-200, 200)};

// Positions of the four all-inner tripletons, keyed by the slot NOT in the
// tripleton: {g1,g2,g3} opposite g0 and so on.
const Point kInnerTripleton[4] = {pt(200, 200), pt(-200, -200), pt(-600, 600), pt(600, -600)};

// Per inner-pair face: perpendicular bend ray (midpoint of the pair chord,
// integer direction, base offset and step).
struct FaceRay {
    Point mid;
    Point dir;
    long long base;
    long long step;
};

FaceRay face_ray(int slot_a, int slot_b) {
    // slots ascending; the six pairs map to the six cube faces.
    if (slot_a == 0 && slot_b == 1) return {pt(0, 0), pt(1, -1), 650, 36};      // outer face
    if (slot_a == 0 && slot_b == 2) return {pt(-200, -400), pt(1, -2), 8, 5};   // south
    if (slot_a == 0 && slot_b == 3) return {pt(-400, -200), pt(-2, 1), 8, 5};   // west
    if (slot_a == 1 && slot_b == 2) return {pt(400, 200), pt(2, -1), 8, 5};     // east
    if (slot_a == 1 && slot_b == 3) return {pt(200, 400), pt(1, -2), 8, 5};     // north
    return {pt(0, 0), pt(1, 1), 8, 5};                                          // inner face
}

// Pendant fan per inner slot: cone between two integer directions, radius.
struct PendantCone {
    Point from;
    Point to;
    long long radius;
};

PendantCone pendant_cone(int slot) {
    switch (slot) {
        case 0: return {pt(-4, -1), pt(-3, -4), 45}; // outer face, southwest of g0
        case 1: return {pt(4, 1), pt(3, 4), 45};     // outer face, northeast of g1
        case 2: return {pt(-6, 5), pt(-6, 1), 40};   // inner face, from g2
        default: return {pt(-4, 1), pt(-4, -1), 45}; // west face, from g3
    }
}

Point scale_to_radius(const Point& dir, long long radius) {
    Rat ax = dir.x < 0 ? -dir.x : dir.x;
    Rat ay = dir.y < 0 ? -dir.y : dir.y;
    Rat m = ax > ay ? ax : ay;
    return Point{dir.x * radius / m, dir.y * radius / m};
}

// Ring directions for the outer-only tripletons: angles spread over
// [60, 240] degrees, kept away from the outer-face bend wedge at -45.
Point ring_direction(int index, int count) {
    double angle = (60.0 + (index + 0.5) * 180.0 / count) * 3.14159265358979323846 / 180.0;
    long long dx = std::llround(std::cos(angle) * 1000.0);
    long long dy = std::llround(std::sin(angle) * 1000.0);
    return pt(dx, dy);
}

DrawingResult build_clustered_drawing(int n, const ClusterPlan& plan, std::string note) {
    IncidenceGraph g = generate_incidence_graph(3, n);

    std::vector<int> inner_slot(n, -1);
    for (std::size_t i = 0; i < plan.inner.size(); ++i) inner_slot[plan.inner[i]] = static_cast<int>(i);
    std::vector<int> outer_slot(n, -1);
    for (std::size_t i = 0; i < plan.outer.size(); ++i) outer_slot[plan.outer[i]] = static_cast<int>(i);
    const int p = plan.pair_count;

    std::vector<Point> coords(g.vertex_count());

    // Singletons.
    for (int s = 0; s < n; ++s) {
        if (inner_slot[s] >= 0) {
            coords[s] = kInnerSingleton[inner_slot[s]];
        } else {
            int slot = outer_slot[s];
            Point dir = pair_direction(slot % p, p);
            long long side = slot < p ? 1 : -1;
            coords[s] = Point{dir.x * kFarScale * side, dir.y * kFarScale * side};
        }
    }

    // Tripletons by inner-membership class.
    std::vector<int> pendant_used(4, 0);
    int ring_used = 0;
    const int ring_count = static_cast<int>(plan.outer.size() >= 3
                               ? (plan.outer.size() * (plan.outer.size() - 1) * (plan.outer.size() - 2)) / 6
                               : 0);

    for (int v : kton_indices(g)) {
        std::vector<int> ms = g.vertices[v].members();
        std::vector<int> in, out;
        for (int m : ms) (inner_slot[m] >= 0 ? in : out).push_back(m);
        switch (in.size()) {
            case 3: {
                // cube tripleton: opposite the absent inner slot
                int absent = 0;
                for (int slot = 0; slot < 4; ++slot) {
                    int member = plan.inner[slot];
                    if (std::find(in.begin(), in.end(), member) == in.end()) absent = slot;
                }
                coords[v] = kInnerTripleton[absent];
                break;
            }
            case 2: {
                int sa = inner_slot[in[0]];
                int sb = inner_slot[in[1]];
                if (sa > sb) std::swap(sa, sb);
                FaceRay ray = face_ray(sa, sb);
                long long offset = ray.base + ray.step * outer_slot[out[0]];
                coords[v] = Point{ray.mid.x + ray.dir.x * offset, ray.mid.y + ray.dir.y * offset};
                break;
            }
            case 1: {
                int slot = inner_slot[in[0]];
                PendantCone cone = pendant_cone(slot);
                const int total = static_cast<int>(plan.outer.size() * (plan.outer.size() - 1) / 2);
                int k = pendant_used[slot]++;
                int hi = std::max(total - 1, 1);
                Point dir{cone.from.x * (hi - k) + cone.to.x * k, cone.from.y * (hi - k) + cone.to.y * k};
                Point offset = scale_to_radius(dir, cone.radius);
                coords[v] = Point{coords[in[0]].x + offset.x, coords[in[0]].y + offset.y};
                break;
            }
            default: {
                Point dir = ring_direction(ring_used++, std::max(ring_count, 1));
                coords[v] = scale_to_radius(dir, 700);
                break;
            }
        }
    }

    // Jitter every cluster vertex (everything except the far corners) by a
    // vertex-unique rational, making all in-cluster x and y coordinates, and
    // their projections along the pair axes, pairwise distinct.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v < n && inner_slot[v] < 0) continue; // far corner
        coords[v].x += Rat(v + 1, kJitterDenomX);
        coords[v].y += Rat(v + 1, kJitterDenomY);
    }

    // Layers: inner-incident edges in layer 0, pair q in layer 1 + q.
    std::vector<int> layers(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int s = g.edges[e].u;
        layers[e] = inner_slot[s] >= 0 ? 0 : 1 + (outer_slot[s] % p);
    }

    LayeredDrawing d{std::move(g), std::move(coords), std::move(layers), 1 + p};
    return finish(std::move(d), std::move(note));
}

} // namespace

DrawingResult g38_geometric_drawing() {
    ClusterPlan plan;
    plan.inner = {1, 3, 5, 7};
    plan.outer = {0, 2, 4, 6}; // pairs {0,4} and {2,6}
    plan.pair_count = 2;
    return build_clustered_drawing(8, plan, "G3(8), layers: inner planar / pair {0,4} / pair {2,6}");
}

int expected_upper_bound_layers(int n) {
    if (n < 4) fail(Errc::invalid_parameters, "n must be at least 4");
    return (n - 2 + 1) / 2; // ceil((n-2)/2)
}

DrawingResult upper_bound_drawing(int n) {
    if (n < 4) fail(Errc::invalid_parameters, "n must be at least 4");
    if (n == 4) {
        DrawingResult cube = g3_planar_drawing_n4();
        cube.note = "n=4 reduces to the planar cube drawing";
        return cube;
    }
    if (n % 2 == 1) {
        // Odd n: draw G_3(n+1) and take the induced sub-drawing.
        DrawingResult big = upper_bound_drawing(n + 1);
        IncidenceGraph small = generate_incidence_graph(3, n);
        std::vector<Point> coords(small.vertex_count());
        std::vector<int> layers(small.edge_count());
        // Vertex mapping: subsets of {0..n-1} keep their identity.
        std::map<std::uint64_t, int> big_index;
        for (int v = 0; v < big.drawing.graph.vertex_count(); ++v)
            big_index[big.drawing.graph.vertices[v].bits] = v;
        for (int v = 0; v < small.vertex_count(); ++v)
            coords[v] = big.drawing.coords[big_index.at(small.vertices[v].bits)];
        std::map<std::pair<int, int>, int> big_edge;
        for (int e = 0; e < big.drawing.graph.edge_count(); ++e) {
            const EdgeRef& ee = big.drawing.graph.edges[e];
            big_edge[{ee.u, ee.v}] = e;
        }
        for (int e = 0; e < small.edge_count(); ++e) {
            const EdgeRef& ee = small.edges[e];
            int bu = big_index.at(small.vertices[ee.u].bits);
            int bv = big_index.at(small.vertices[ee.v].bits);
            layers[e] = big.drawing.layers[big_edge.at({bu, bv})];
        }
        // Compact the used layers.
        std::map<int, int> remap;
        for (int& l : layers) {
            auto it = remap.try_emplace(l, static_cast<int>(remap.size())).first;
            l = it->second;
        }
        LayeredDrawing d{std::move(small), std::move(coords), std::move(layers),
                         static_cast<int>(remap.size())};
        return finish(std::move(d), "odd n embedded into n+1");
    }
    ClusterPlan plan;
    plan.pair_count = (n - 4) / 2;
    for (int s = 0; s < n - 4; ++s) plan.outer.push_back(s);
    for (int s = n - 4; s < n; ++s) plan.inner.push_back(s);
    return build_clustered_drawing(n, plan, "inner = last four singletons, outer paired antipodally");
}

DrawingResult two_tripleton_inner_fixture(CrossingCharacter character) {
    // Six singletons on a flattened hexagon, numbered clockwise from the
    // top; tripletons A = {0,1,2} and D = {1,3,5} satisfy a < d < c < f.
    IncidenceGraph g;
    g.n = 6;
    g.k = 3;
    for (int i = 0; i < 6; ++i) g.vertices.push_back(SubsetVertex::singleton(i));
    g.vertices.push_back(SubsetVertex::of({0, 1, 2})); // vertex 6 (A)
    g.vertices.push_back(SubsetVertex::of({1, 3, 5})); // vertex 7 (D)
    // Edges grouped per tripleton, members ascending; layer = role.
    g.edges = {{0, 6}, {1, 6}, {2, 6}, {1, 7}, {3, 7}, {5, 7}};
    std::vector<int> layers = {0, 1, 2, 0, 1, 2};

    std::vector<Point> coords = {
        pt(0, 100),  // 0
        pt(87, 50),   // 1
        pt(87, -50),  // 2
        pt(0, -100),  // 3
        pt(-87, -50), // 4
        pt(-87, 50),  // 5
    };
    if (character == CrossingCharacter::Convex) {
        coords.push_back(pt(40, 10)); // A
        coords.push_back(pt(20, 60)); // D: D-high to 5 crosses A-low to 0
    } else {
        coords.push_back(pt(5, 85));  // A
        coords.push_back(pt(25, 35)); // D: A-high to 2 crosses D-low to 1
    }

    LayeredDrawing d{std::move(g), std::move(coords), std::move(layers), 3};
    return finish(std::move(d), std::string("two-tripleton inner fixture, ") +
                                    to_string(character));
}

} // namespace thickness
