#pragma once

#include <random>
#include <vector>

#include "pldg/arc.hpp"
#include "pldg/geometry.hpp"

namespace testsupport {

using pldg::CircularArc;
using pldg::Disk;
using pldg::Point;

inline Point random_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> coord(lo, hi);
    return {coord(rng), coord(rng)};
}

inline std::vector<Point> random_points(std::mt19937_64& rng, int n, double lo, double hi) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, lo, hi));
    return pts;
}

// Sampling stand-in for the analytic arc containment: walks the open
// arc at the given resolution and tests disk interior membership
// pointwise. Also reports the smallest boundary clearance seen, so
// callers can skip cases the sampling itself cannot decide.
struct SampledContainment {
    bool inside;
    double min_clearance;
};

inline SampledContainment sample_arc_in_disk(const CircularArc& arc, const Disk& d,
                                             int samples = 10000) {
    SampledContainment result{true, 1e300};
    for (int i = 1; i < samples; ++i) {
        double t = arc.start_angle()
                 + arc.extent() * static_cast<double>(i) / static_cast<double>(samples);
        Point p = arc.point_at(t);
        double gap = d.radius - pldg::distance(p, d.center);
        result.min_clearance = std::min(result.min_clearance, std::abs(gap));
        if (gap <= 0.0) result.inside = false;
    }
    return result;
}

} // namespace testsupport
