#pragma once

#include <array>
#include <vector>

#include "thickness/rational.hpp"

namespace thickness {

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& other) const { return x == other.x && y == other.y; }
    bool operator!=(const Point& other) const { return !(*this == other); }
};

// Lexicographic order, used for canonical hull starts and dedup.
bool lex_less(const Point& a, const Point& b);

enum class Orientation { Counterclockwise, Clockwise, Collinear };

// Exact cross product (q - p) x (r - p).
Rat cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_);
};

enum class SegmentRelation { Disjoint, ProperCrossing, SharedEndpoint, Touching, Overlapping };

const char* to_string(SegmentRelation rel);

// Exact five-way classification of how two segments meet. Symmetric.
SegmentRelation segment_relation(const Segment& s, const Segment& t);

bool point_on_segment(const Point& p, const Segment& s);          // endpoints included
bool point_in_segment_interior(const Point& p, const Segment& s); // endpoints excluded

// Strict hull: counterclockwise, no collinear vertices, starts at the
// lexicographically smallest hull point. Handles 1, 2 and all-collinear
// inputs by returning the extreme points.
std::vector<Point> convex_hull(std::vector<Point> points);

// True iff all points are distinct hull vertices and no three are collinear.
bool in_strictly_convex_position(const std::vector<Point>& points);

enum class HullLocation { Inside, Boundary, Outside };

const char* to_string(HullLocation loc);

// `hull` must be a counterclockwise strictly convex polygon.
HullLocation point_vs_hull(const Point& p, const std::vector<Point>& hull);

// The three rays apex->target[i] leave a gap greater than 180 degrees iff
// the apex lies strictly outside the targets' triangle. Returns the target
// indices in clockwise order starting with the first ray after that gap.
// "Clockwise" is the negative mathematical direction; see clockwise_numbering.
std::array<int, 3> reflex_gap_order(const Point& apex, const std::array<Point, 3>& targets);

// Decides angle(ray1a, apex1, ray1b) + angle(ray2a, apex2, ray2b) < 180
// degrees exactly, via sign(cos t1 + cos t2) with sign-careful squaring.
// Each angle must be strictly between 0 and 180 degrees.
bool angle_sum_below_pi(const Point& apex1, const Point& ray1a, const Point& ray1b,
                        const Point& apex2, const Point& ray2a, const Point& ray2b);

// `count` rational points on the circle of the given radius, in clockwise
// order starting at the top. Distinct points on a circle are automatically
// in strictly convex position. Supports count <= 48.
std::vector<Point> rational_circle_points(int count, const Rat& radius);

} // namespace thickness
