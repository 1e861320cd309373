#pragma once

#include "pldg/geometry.hpp"

namespace pldg {

// Sign of the orientation determinant: +1 if r lies strictly left of
// the directed line pq, -1 if strictly right, 0 if collinear. The sign
// is exact: a floating-point filter handles the easy cases and an
// expansion-arithmetic fallback decides the rest.
int orient(Point p, Point q, Point r);

// Sign of the raw incircle determinant for the triple (a,b,c) taken in
// the given order: positive means d is inside the circumcircle when
// (a,b,c) is counterclockwise, and the sign flips with orientation.
// Exact like orient.
int in_circle_oriented(Point a, Point b, Point c, Point d);

// Orientation-normalized incircle test: +1 if d lies strictly inside
// the circle through a, b, c, 0 if cocircular, -1 if outside,
// regardless of the order of a, b, c. Throws GeneralPositionError if
// a, b, c are collinear.
int in_circle(Point a, Point b, Point c, Point d);

} // namespace pldg
