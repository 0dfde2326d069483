#include "thickness/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "thickness/errors.hpp"

namespace thickness {

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Rat cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = sign(cross(p, q, r));
    if (s > 0) return Orientation::Counterclockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b) fail(Errc::degenerate_input, "segment endpoints coincide");
}

const char* to_string(SegmentRelation rel) {
    switch (rel) {
        case SegmentRelation::Disjoint: return "Disjoint";
        case SegmentRelation::ProperCrossing: return "ProperCrossing";
        case SegmentRelation::SharedEndpoint: return "SharedEndpoint";
        case SegmentRelation::Touching: return "Touching";
        case SegmentRelation::Overlapping: return "Overlapping";
    }
    return "?";
}

const char* to_string(HullLocation loc) {
    switch (loc) {
        case HullLocation::Inside: return "Inside";
        case HullLocation::Boundary: return "Boundary";
        case HullLocation::Outside: return "Outside";
    }
    return "?";
}

namespace {

// For a point known to be collinear with s, "between" reduces to a
// coordinate box test.
bool collinear_point_in_box(const Point& p, const Segment& s) {
    const Rat& lox = s.a.x < s.b.x ? s.a.x : s.b.x;
    const Rat& hix = s.a.x < s.b.x ? s.b.x : s.a.x;
    const Rat& loy = s.a.y < s.b.y ? s.a.y : s.b.y;
    const Rat& hiy = s.a.y < s.b.y ? s.b.y : s.a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

} // namespace

bool point_on_segment(const Point& p, const Segment& s) {
    if (sign(cross(s.a, s.b, p)) != 0) return false;
    return collinear_point_in_box(p, s);
}

bool point_in_segment_interior(const Point& p, const Segment& s) {
    if (p == s.a || p == s.b) return false;
    return point_on_segment(p, s);
}

SegmentRelation segment_relation(const Segment& s, const Segment& t) {
    int o1 = sign(cross(s.a, s.b, t.a));
    int o2 = sign(cross(s.a, s.b, t.b));
    int o3 = sign(cross(t.a, t.b, s.a));
    int o4 = sign(cross(t.a, t.b, s.b));

    if (o1 == 0 && o2 == 0) {
        // All four endpoints on one line: interval arithmetic on that line.
        bool sa = collinear_point_in_box(s.a, t);
        bool sb = collinear_point_in_box(s.b, t);
        bool ta = collinear_point_in_box(t.a, s);
        bool tb = collinear_point_in_box(t.b, s);
        if (!sa && !sb && !ta && !tb) return SegmentRelation::Disjoint;
        // The intersection is an interval; if it has two distinct endpoints
        // it is a nondegenerate overlap, otherwise a single shared point,
        // which on a common line is necessarily an endpoint of both.
        std::vector<Point> meet;
        auto add = [&meet](const Point& p) {
            if (std::find(meet.begin(), meet.end(), p) == meet.end()) meet.push_back(p);
        };
        if (sa) add(s.a);
        if (sb) add(s.b);
        if (ta) add(t.a);
        if (tb) add(t.b);
        if (meet.size() >= 2) return SegmentRelation::Overlapping;
        return SegmentRelation::SharedEndpoint;
    }

    bool shared = (s.a == t.a) || (s.a == t.b) || (s.b == t.a) || (s.b == t.b);
    if (shared) return SegmentRelation::SharedEndpoint;

    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return SegmentRelation::ProperCrossing;

    // An endpoint of one in the interior of the other. Two non-collinear
    // segments meet in at most one point, so at most one such incidence.
    if (o1 == 0 && collinear_point_in_box(t.a, s)) return SegmentRelation::Touching;
    if (o2 == 0 && collinear_point_in_box(t.b, s)) return SegmentRelation::Touching;
    if (o3 == 0 && collinear_point_in_box(s.a, t)) return SegmentRelation::Touching;
    if (o4 == 0 && collinear_point_in_box(s.b, t)) return SegmentRelation::Touching;

    return SegmentRelation::Disjoint;
}

std::vector<Point> convex_hull(std::vector<Point> points) {
    if (points.empty()) fail(Errc::invalid_parameters, "convex_hull of empty set");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;

    std::vector<Point> hull;
    hull.reserve(2 * n);
    // Lower then upper chain; popping on cross <= 0 drops collinear points,
    // yielding the strict counterclockwise hull.
    for (const Point& p : points) {
        while (hull.size() >= 2 && sign(cross(hull[hull.size() - 2], hull[hull.size() - 1], p)) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower_size = hull.size() + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (hull.size() >= lower_size && sign(cross(hull[hull.size() - 2], hull[hull.size() - 1], *it)) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back(); // first point repeated
    return hull;
}

bool in_strictly_convex_position(const std::vector<Point>& points) {
    if (points.size() < 3) fail(Errc::invalid_parameters, "need at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) return false;
    return convex_hull(points).size() == points.size();
}

HullLocation point_vs_hull(const Point& p, const std::vector<Point>& hull) {
    const std::size_t n = hull.size();
    if (n < 3) fail(Errc::degenerate_input, "hull with fewer than 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(hull[i], hull[(i + 1) % n], hull[(i + 2) % n]) != Orientation::Counterclockwise)
            fail(Errc::degenerate_input, "hull is not strictly convex counterclockwise");
    }
    bool boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        int o = sign(cross(a, b, p));
        if (o < 0) return HullLocation::Outside;
        if (o == 0) {
            if (collinear_point_in_box(p, Segment(a, b))) boundary = true;
            // Collinear beyond the edge extent: some other edge sees the
            // point strictly clockwise and returns Outside.
        }
    }
    return boundary ? HullLocation::Boundary : HullLocation::Inside;
}

std::array<int, 3> reflex_gap_order(const Point& apex, const std::array<Point, 3>& targets) {
    std::array<Point, 3> dir;
    for (int i = 0; i < 3; ++i) {
        if (targets[i] == apex) fail(Errc::degenerate_input, "target coincides with apex");
        dir[i] = Point{targets[i].x - apex.x, targets[i].y - apex.y};
    }
    auto ray_cross = [&dir](int i, int j) {
        return sign(dir[i].x * dir[j].y - dir[i].y * dir[j].x);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (ray_cross(i, j) == 0) fail(Errc::degenerate_input, "two rays collinear at apex");

    // (a,b,c) is the clockwise reading after the reflex gap iff each listed
    // step is a clockwise turn of less than 180 degrees; the leftover gap
    // back to `a` then exceeds 180. Exactly one permutation qualifies when
    // the apex is outside the triangle, none when inside.
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : kPerms) {
        if (ray_cross(perm[0], perm[1]) < 0 && ray_cross(perm[1], perm[2]) < 0 &&
            ray_cross(perm[0], perm[2]) < 0) {
            return {perm[0], perm[1], perm[2]};
        }
    }
    fail(Errc::no_reflex_angle, "apex lies inside the triangle of the targets");
}

std::vector<Point> rational_circle_points(int count, const Rat& radius) {
    if (count < 1 || count > 48) fail(Errc::invalid_parameters, "count must be in [1, 48]");
    if (sign(radius) <= 0) fail(Errc::invalid_parameters, "radius must be positive");
    // Tangent half-angle parametrization: t rational gives the exact circle
    // point r*((1-t^2), 2t)/(1+t^2). Approximating tan(theta/2) by a 256th
    // keeps the points near evenly spread; exactness of the positions is all
    // that matters downstream.
    std::vector<Point> out;
    out.reserve(count);
    const double pi = 3.14159265358979323846;
    for (int j = 0; j < count; ++j) {
        double theta_deg = 90.0 - 360.0 * j / count;
        bool antipode = false;
        if (theta_deg <= -90.0) { // keep |t| modest, use the antipodal form
            theta_deg += 180.0;
            antipode = true;
        }
        double t_real = std::tan(theta_deg * pi / 360.0);
        Rat t(static_cast<long long>(std::llround(t_real * 256)), 256);
        Rat denom = 1 + t * t;
        Rat x = radius * (1 - t * t) / denom;
        Rat y = radius * 2 * t / denom;
        out.push_back(antipode ? Point{-x, -y} : Point{x, y});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j]) fail(Errc::degenerate_input, "circle points collide at this count");
    return out;
}

bool angle_sum_below_pi(const Point& apex1, const Point& ray1a, const Point& ray1b,
                        const Point& apex2, const Point& ray2a, const Point& ray2b) {
    auto vec = [](const Point& from, const Point& to) {
        if (from == to) fail(Errc::degenerate_input, "zero-length ray");
        return Point{to.x - from.x, to.y - from.y};
    };
    Point u1 = vec(apex1, ray1a), v1 = vec(apex1, ray1b);
    Point u2 = vec(apex2, ray2a), v2 = vec(apex2, ray2b);

    auto angle_data = [](const Point& u, const Point& v) {
        Rat cr = u.x * v.y - u.y * v.x;
        if (sign(cr) == 0) fail(Errc::degenerate_input, "zero or straight angle");
        Rat dot = u.x * v.x + u.y * v.y;
        Rat norm2 = (u.x * u.x + u.y * u.y) * (v.x * v.x + v.y * v.y);
        return std::pair<Rat, Rat>(dot, norm2);
    };
    auto [d1, s1] = angle_data(u1, v1);
    auto [d2, s2] = angle_data(u2, v2);

    // theta1 + theta2 < pi  <=>  cos t1 + cos t2 > 0, with
    // cos ti = di / sqrt(si). Squaring is valid once the signs are split.
    int sgn1 = sign(d1);
    int sgn2 = sign(d2);
    if (sgn1 >= 0 && sgn2 >= 0) return sgn1 > 0 || sgn2 > 0;
    if (sgn1 <= 0 && sgn2 <= 0) return false;
    Rat lhs = d1 * d1 * s2; // |d1 sqrt(s2)|^2
    Rat rhs = d2 * d2 * s1; // |d2 sqrt(s1)|^2
    if (sgn1 > 0) return lhs > rhs;
    return rhs > lhs;
}

} // namespace thickness
