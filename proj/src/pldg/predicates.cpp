#include "pldg/predicates.hpp"

#include <cmath>
#include <limits>
#include <vector>

// Sign-exact predicates. Each predicate first evaluates the determinant
// in plain floating point together with a forward error bound; when the
// magnitude beats the bound the sign is already certain. Otherwise the
// determinant is recomputed exactly as a multi-term floating-point
// expansion (every component exact, components non-overlapping and
// ordered by magnitude), whose leading component carries the true sign.
//
// This translation unit must be compiled without floating-point
// contraction; the CMake target sets -ffp-contract=off for it.

namespace pldg {
namespace {

constexpr double kMachEps = std::numeric_limits<double>::epsilon() * 0.5; // 2^-53
constexpr double kOrientErrBound = (3.0 + 16.0 * kMachEps) * kMachEps;
constexpr double kInCircleErrBound = (10.0 + 96.0 * kMachEps) * kMachEps;

using Expansion = std::vector<double>;

// a + b = hi + lo exactly, no magnitude precondition.
inline void two_sum(double a, double b, double& hi, double& lo) {
    double s = a + b;
    double bv = s - a;
    double av = s - bv;
    lo = (a - av) + (b - bv);
    hi = s;
}

// a * b = hi + lo exactly; fma gives the rounding error directly.
inline void two_prod(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

// Add a single double to an expansion (Shewchuk's grow-expansion),
// dropping zero components.
Expansion grow(const Expansion& e, double b) {
    Expansion h;
    h.reserve(e.size() + 1);
    double q = b;
    for (double comp : e) {
        double hi, lo;
        two_sum(q, comp, hi, lo);
        if (lo != 0.0) h.push_back(lo);
        q = hi;
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Expansion add(const Expansion& e, const Expansion& f) {
    Expansion acc = e;
    for (double comp : f) acc = grow(acc, comp);
    return acc;
}

// acc += sign * (a*b), exactly.
void add_product(Expansion& acc, double sign, double a, double b) {
    double hi, lo;
    two_prod(a, b, hi, lo);
    acc = grow(acc, sign * lo);
    acc = grow(acc, sign * hi);
}

Expansion scale(const Expansion& e, double b) {
    Expansion acc;
    for (double comp : e) add_product(acc, 1.0, comp, b);
    return acc;
}

Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion acc;
    for (double comp : f) acc = add(acc, scale(e, comp));
    return acc;
}

int sign_of(const Expansion& e) {
    // Largest-magnitude component is last; zeros were eliminated.
    if (e.empty()) return 0;
    double lead = e.back();
    if (lead > 0.0) return 1;
    if (lead < 0.0) return -1;
    return 0;
}

int sign_of(double v) {
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

// Expansion of det [[px,py,1],[qx,qy,1],[rx,ry,1]].
Expansion orient_expansion(Point p, Point q, Point r) {
    Expansion det;
    add_product(det, +1.0, q.x, r.y);
    add_product(det, -1.0, q.x, p.y);
    add_product(det, -1.0, p.x, r.y);
    add_product(det, -1.0, q.y, r.x);
    add_product(det, +1.0, q.y, p.x);
    add_product(det, +1.0, p.y, r.x);
    return det;
}

int orient_exact(Point p, Point q, Point r) {
    return sign_of(orient_expansion(p, q, r));
}

Expansion lift_expansion(Point p) {
    Expansion e;
    add_product(e, 1.0, p.x, p.x);
    add_product(e, 1.0, p.y, p.y);
    return e;
}

// Sign of the 4x4 incircle determinant with rows (x, y, x^2+y^2, 1),
// expanded along the lifted column.
int in_circle_exact(Point a, Point b, Point c, Point d) {
    Expansion det = mul(lift_expansion(a), orient_expansion(b, c, d));
    det = add(det, scale(mul(lift_expansion(b), orient_expansion(a, c, d)), -1.0));
    det = add(det, mul(lift_expansion(c), orient_expansion(a, b, d)));
    det = add(det, scale(mul(lift_expansion(d), orient_expansion(a, b, c)), -1.0));
    return sign_of(det);
}

} // namespace

int orient(Point p, Point q, Point r) {
    double detleft = (q.x - p.x) * (r.y - p.y);
    double detright = (q.y - p.y) * (r.x - p.x);
    double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        // detleft is exactly zero, so det = -detright whose sign is
        // preserved by the single rounded multiplication.
        return sign_of(det);
    }

    double errbound = kOrientErrBound * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);

    return orient_exact(p, q, r);
}

int in_circle_oriented(Point a, Point b, Point c, Point d) {
    double adx = a.x - d.x, ady = a.y - d.y;
    double bdx = b.x - d.x, bdy = b.y - d.y;
    double cdx = c.x - d.x, cdy = c.y - d.y;

    double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    double cdxady = cdx * ady, adxcdy = adx * cdy;
    double adxbdy = adx * bdy, bdxady = bdx * ady;
    double alift = adx * adx + ady * ady;
    double blift = bdx * bdx + bdy * bdy;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy)
               + blift * (cdxady - adxcdy)
               + clift * (adxbdy - bdxady);
    double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift
                     + (std::abs(cdxady) + std::abs(adxcdy)) * blift
                     + (std::abs(adxbdy) + std::abs(bdxady)) * clift;

    double errbound = kInCircleErrBound * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);

    return in_circle_exact(a, b, c, d);
}

int in_circle(Point a, Point b, Point c, Point d) {
    int o = orient(a, b, c);
    if (o == 0) throw GeneralPositionError("in_circle: a, b, c are collinear");
    int s = in_circle_oriented(a, b, c, d);
    return o > 0 ? s : -s;
}

} // namespace pldg
