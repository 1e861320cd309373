#pragma once

#include <cmath>
#include <vector>

#include "pldg/errors.hpp"

namespace pldg {

// Metric tolerance for all floating-point comparisons that are not
// handled by the sign-exact predicates. Instance generation keeps every
// decision quantity clear of its threshold by a multiple of this.
inline constexpr double kEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Strict lexicographic order, used wherever geometry must be processed
// in a reproducible sequence.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Disk {
    Point center;
    double radius = 0.0;

    bool contains_interior(Point p) const { return distance(p, center) < radius; }
    bool contains_closed(Point p) const { return distance(p, center) <= radius + kEps; }
    bool on_boundary(Point p) const {
        return std::abs(distance(p, center) - radius) <= kEps;
    }
};

// Face of a triangulation; vertex ids index into the owning point list.
struct Triangle {
    int a = -1;
    int b = -1;
    int c = -1;

    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend bool operator<(const Triangle& s, const Triangle& t) {
        if (s.a != t.a) return s.a < t.a;
        if (s.b != t.b) return s.b < t.b;
        return s.c < t.c;
    }
};

// Center of the circle through a, b, c. Throws GeneralPositionError on
// collinear input. Together with its distance to a this defines the
// circumdisk.
Point circumcenter(Point a, Point b, Point c);

// True iff segments ab and cd properly cross: they are not collinear
// and share a point interior to both. Contact at an endpoint does not
// count. Decided exactly.
bool segments_cross(Point a, Point b, Point c, Point d);

// All boundary-boundary intersection points of the two circles, within
// metric tolerance. Tangency yields one point. Throws
// CoincidentCirclesError when the circles are identical; concentric
// distinct circles yield no points.
std::vector<Point> circle_circle_intersections(const Disk& d1, const Disk& d2);

} // namespace pldg
