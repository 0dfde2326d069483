#include "thickness/classification.hpp"

#include <algorithm>
#include <map>

#include "thickness/errors.hpp"

namespace thickness {

int SingletonNumbering::position(int singleton_vertex) const {
    if (singleton_vertex < 0 || singleton_vertex >= static_cast<int>(position_of.size()) ||
        position_of[singleton_vertex] < 0)
        fail(Errc::invalid_parameters, "vertex is not a numbered singleton");
    return position_of[singleton_vertex];
}

SingletonNumbering clockwise_numbering(const LayeredDrawing& d, int start_vertex) {
    const int n = d.graph.n;
    if (!d.graph.is_singleton_index(start_vertex))
        fail(Errc::invalid_parameters, "start must be a singleton vertex");
    std::vector<Point> singleton_points(d.coords.begin(), d.coords.begin() + n);
    if (n < 3 || !in_strictly_convex_position(singleton_points))
        fail(Errc::not_convex_position, "singletons are not in strictly convex position");

    std::vector<Point> hull = convex_hull(singleton_points); // counterclockwise
    auto vertex_at = [&singleton_points](const Point& p) {
        for (std::size_t i = 0; i < singleton_points.size(); ++i)
            if (singleton_points[i] == p) return static_cast<int>(i);
        fail(Errc::not_convex_position, "hull vertex is not a singleton");
    };

    SingletonNumbering numbering;
    numbering.order.reserve(n);
    numbering.position_of.assign(d.graph.vertex_count(), -1);
    // Reverse the counterclockwise hull to walk clockwise.
    std::vector<int> cw;
    for (auto it = hull.rbegin(); it != hull.rend(); ++it) cw.push_back(vertex_at(*it));
    auto start_it = std::find(cw.begin(), cw.end(), start_vertex);
    std::rotate(cw.begin(), start_it, cw.end());
    numbering.order = cw;
    for (int i = 0; i < n; ++i) numbering.position_of[numbering.order[i]] = i;
    return numbering;
}

const char* to_string(EdgeRole role) {
    switch (role) {
        case EdgeRole::Low: return "Low";
        case EdgeRole::Middle: return "Middle";
        case EdgeRole::High: return "High";
    }
    return "?";
}

std::vector<EdgeRole> edge_roles(const IncidenceGraph& g, const SingletonNumbering& numbering) {
    if (g.k != 3) fail(Errc::wrong_arity, "edge roles need a k=3 subset graph");
    std::vector<EdgeRole> roles(g.edge_count(), EdgeRole::Middle);
    // Group edges by their k-ton endpoint, then rank singletons by position.
    std::map<int, std::vector<int>> incident;
    for (int e = 0; e < g.edge_count(); ++e) incident[g.edges[e].v].push_back(e);
    for (const auto& [kton, edge_list] : incident) {
        if (edge_list.size() != 3) fail(Errc::wrong_arity, "tripleton without exactly 3 edges");
        std::array<std::pair<int, int>, 3> ranked; // (position, edge index)
        for (int i = 0; i < 3; ++i) {
            int e = edge_list[i];
            ranked[i] = {numbering.position(g.edges[e].u), e};
        }
        std::sort(ranked.begin(), ranked.end());
        roles[ranked[0].second] = EdgeRole::Low;
        roles[ranked[1].second] = EdgeRole::Middle;
        roles[ranked[2].second] = EdgeRole::High;
    }
    return roles;
}

std::string TripletonType::symbol() const {
    std::string s;
    for (int digit : digits) s += static_cast<char>('0' + digit);
    return s;
}

TripletonType TripletonType::from_symbol(const std::string& symbol) {
    if (symbol.size() != 3) fail(Errc::invalid_parameters, "type symbol must have 3 digits");
    TripletonType t;
    bool seen[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
        int digit = symbol[i] - '0';
        if (digit < 0 || digit > 2 || seen[digit])
            fail(Errc::invalid_parameters, "type symbol must be a permutation of 012");
        seen[digit] = true;
        t.digits[i] = digit;
    }
    return t;
}

const char* to_string(InnerOuter status) {
    switch (status) {
        case InnerOuter::Inner: return "Inner";
        case InnerOuter::Outer: return "Outer";
        case InnerOuter::Mixed: return "Mixed";
        case InnerOuter::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(CrossingCharacter c) {
    switch (c) {
        case CrossingCharacter::Convex: return "Convex";
        case CrossingCharacter::Concave: return "Concave";
    }
    return "?";
}

bool is_convex_drawing(const LayeredDrawing& d) {
    if (d.graph.n < 3) return false;
    std::vector<Point> singleton_points(d.coords.begin(), d.coords.begin() + d.graph.n);
    if (!in_strictly_convex_position(singleton_points)) return false;
    return verify_geometric_thickness_witness(d, 3);
}

bool is_coherent(const LayeredDrawing& d, const SingletonNumbering& numbering) {
    if (!is_convex_drawing(d)) return false;
    if (d.graph.k != 3) return false;
    std::vector<EdgeRole> roles = edge_roles(d.graph, numbering);
    // Each role must map to exactly one layer, injectively.
    std::map<EdgeRole, int> layer_of_role;
    std::map<int, EdgeRole> role_of_layer;
    for (int e = 0; e < d.graph.edge_count(); ++e) {
        auto [it, inserted] = layer_of_role.try_emplace(roles[e], d.layers[e]);
        if (!inserted && it->second != d.layers[e]) return false;
        auto [jt, fresh] = role_of_layer.try_emplace(d.layers[e], roles[e]);
        if (!fresh && jt->second != roles[e]) return false;
    }
    return true;
}

std::vector<int> coherent_starts(const LayeredDrawing& d) {
    std::vector<int> out;
    for (int s = 0; s < d.graph.n; ++s) {
        SingletonNumbering numbering = clockwise_numbering(d, s);
        if (is_coherent(d, numbering)) out.push_back(s);
    }
    return out;
}

namespace {

std::vector<Point> singleton_hull(const LayeredDrawing& d) {
    std::vector<Point> singleton_points(d.coords.begin(), d.coords.begin() + d.graph.n);
    if (d.graph.n < 3 || !in_strictly_convex_position(singleton_points))
        fail(Errc::not_convex_position, "singletons are not in strictly convex position");
    return convex_hull(singleton_points);
}

} // namespace

InnerOuter inner_outer(const LayeredDrawing& d) {
    std::vector<Point> hull = singleton_hull(d);
    bool any_inside = false;
    bool any_outside = false;
    for (int v : kton_indices(d.graph)) {
        switch (point_vs_hull(d.coords[v], hull)) {
            case HullLocation::Inside: any_inside = true; break;
            case HullLocation::Outside: any_outside = true; break;
            case HullLocation::Boundary: return InnerOuter::Degenerate;
        }
    }
    if (any_inside && any_outside) return InnerOuter::Mixed;
    if (any_outside) return InnerOuter::Outer;
    return InnerOuter::Inner;
}

TripletonType tripleton_type(const LayeredDrawing& d, const SingletonNumbering& numbering,
                             int tripleton_vertex) {
    if (d.graph.k != 3) fail(Errc::wrong_arity, "tripleton types need a k=3 subset graph");
    const SubsetVertex& t = d.graph.vertices.at(tripleton_vertex);
    if (t.cardinality() != 3) fail(Errc::invalid_parameters, "vertex is not a tripleton");

    std::vector<int> ms = t.members();
    std::array<Point, 3> targets;
    std::array<EdgeRole, 3> role_of_target;
    std::array<std::pair<int, int>, 3> ranked; // (numbering position, target slot)
    for (int i = 0; i < 3; ++i) {
        targets[i] = d.coords[ms[i]]; // singleton vertex index == ground member
        ranked[i] = {numbering.position(ms[i]), i};
    }
    std::sort(ranked.begin(), ranked.end());
    role_of_target[ranked[0].second] = EdgeRole::Low;
    role_of_target[ranked[1].second] = EdgeRole::Middle;
    role_of_target[ranked[2].second] = EdgeRole::High;

    std::array<int, 3> cw_order = reflex_gap_order(d.coords[tripleton_vertex], targets);
    TripletonType type;
    for (int i = 0; i < 3; ++i) {
        switch (role_of_target[cw_order[i]]) {
            case EdgeRole::Low: type.digits[i] = 0; break;
            case EdgeRole::Middle: type.digits[i] = 1; break;
            case EdgeRole::High: type.digits[i] = 2; break;
        }
    }
    return type;
}

DrawingType drawing_type(const LayeredDrawing& d, const SingletonNumbering& numbering) {
    DrawingType result;
    bool first = true;
    for (int v : kton_indices(d.graph)) {
        TripletonType t = tripleton_type(d, numbering, v);
        if (first) {
            result.type = t;
            result.uniform = true;
            first = false;
        } else if (t != result.type) {
            result.uniform = false;
            return result;
        }
    }
    if (first) fail(Errc::invalid_parameters, "drawing has no tripletons");
    return result;
}

CrossingCharacter crossing_character(const LayeredDrawing& d, const SingletonNumbering& numbering,
                                     int tripleton1, int tripleton2) {
    if (!is_coherent(d, numbering))
        fail(Errc::precondition_violation, "drawing is not a coherent drawing");
    if (inner_outer(d) != InnerOuter::Inner)
        fail(Errc::precondition_violation, "drawing is not inner");

    auto sorted_members = [&](int v) {
        const SubsetVertex& t = d.graph.vertices.at(v);
        if (t.cardinality() != 3) fail(Errc::invalid_parameters, "vertex is not a tripleton");
        std::vector<int> ms = t.members();
        std::sort(ms.begin(), ms.end(), [&numbering](int a, int b) {
            return numbering.position(a) < numbering.position(b);
        });
        return ms;
    };
    std::vector<int> abc = sorted_members(tripleton1);
    std::vector<int> def = sorted_members(tripleton2);
    int a = numbering.position(abc[0]), c = numbering.position(abc[2]);
    int dd = numbering.position(def[0]), f = numbering.position(def[2]);
    if (!(a < dd && dd < c && c < f))
        fail(Errc::precondition_violation, "tripletons do not interleave as a < d < c < f");

    Segment low1(d.coords[tripleton1], d.coords[abc[0]]);
    Segment high1(d.coords[tripleton1], d.coords[abc[2]]);
    Segment low2(d.coords[tripleton2], d.coords[def[0]]);
    Segment high2(d.coords[tripleton2], d.coords[def[2]]);

    bool convex_cross = segment_relation(low1, high2) == SegmentRelation::ProperCrossing;
    bool concave_cross = segment_relation(high1, low2) == SegmentRelation::ProperCrossing;
    if (convex_cross == concave_cross)
        fail(Errc::lemma_violation, convex_cross ? "both low-high crossings occur"
                                                 : "neither low-high crossing occurs");
    return convex_cross ? CrossingCharacter::Convex : CrossingCharacter::Concave;
}

ClassificationReport classify_drawing(const LayeredDrawing& d, int start_vertex) {
    SingletonNumbering numbering = clockwise_numbering(d, start_vertex);
    ClassificationReport report;
    report.numbering = numbering.order;
    report.convex = is_convex_drawing(d);
    report.coherent = is_coherent(d, numbering);
    report.inner_outer_status = inner_outer(d);
    if (d.graph.k == 3) report.roles = edge_roles(d.graph, numbering);

    bool uniform = true;
    std::optional<TripletonType> first;
    for (int v : kton_indices(d.graph)) {
        std::optional<TripletonType> t;
        try {
            t = tripleton_type(d, numbering, v);
        } catch (const Error&) {
            t = std::nullopt; // interior or degenerate tripleton
        }
        report.types.push_back(t);
        if (!t) {
            uniform = false;
        } else if (!first) {
            first = t;
        } else if (*first != *t) {
            uniform = false;
        }
    }
    if (uniform && first) report.uniform_type = first;
    return report;
}

} // namespace thickness
