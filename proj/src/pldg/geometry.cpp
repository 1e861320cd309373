#include "pldg/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "pldg/predicates.hpp"

namespace pldg {

Point circumcenter(Point a, Point b, Point c) {
    if (orient(a, b, c) == 0)
        throw GeneralPositionError("circumcenter: collinear points");
    Point ab = b - a;
    Point ac = c - a;
    double d = 2.0 * cross(ab, ac);
    double ab2 = dot(ab, ab);
    double ac2 = dot(ac, ac);
    double ux = (ac.y * ab2 - ab.y * ac2) / d;
    double uy = (ab.x * ac2 - ac.x * ab2) / d;
    return {a.x + ux, a.y + uy};
}

bool segments_cross(Point a, Point b, Point c, Point d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    // Strictly opposite sides both ways; any zero (collinearity or
    // endpoint contact) fails the strict test.
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::vector<Point> circle_circle_intersections(const Disk& d1, const Disk& d2) {
    Point delta = d2.center - d1.center;
    double d = norm(delta);
    double r1 = d1.radius, r2 = d2.radius;

    if (d <= kEps) {
        if (std::abs(r1 - r2) <= kEps)
            throw CoincidentCirclesError("circle_circle_intersections: identical circles");
        return {}; // concentric, distinct radii
    }
    if (d > r1 + r2 + kEps) return {};             // external, disjoint
    if (d < std::abs(r1 - r2) - kEps) return {};   // one strictly inside the other

    Point u = delta * (1.0 / d);
    double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double h2 = r1 * r1 - a * a;

    Point base = d1.center + u * a;
    if (d >= r1 + r2 - kEps || d <= std::abs(r1 - r2) + kEps || h2 <= 0.0)
        return {base}; // tangent

    double h = std::sqrt(h2);
    Point perp{-u.y, u.x};
    return {base + perp * h, base - perp * h};
}

} // namespace pldg
