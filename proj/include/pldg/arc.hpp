#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pldg/geometry.hpp"

namespace pldg {

// Open arc on a circle boundary, traversed counterclockwise from
// start_angle over extent radians. Endpoints are excluded. Empty and
// full-circle arcs are explicit variants so containment tests never
// deal with wraparound ambiguity; a partial arc with extent 2*pi is the
// full circle minus its start point (the tangency case).
class CircularArc {
public:
    enum class Kind { Empty, Full, Partial };

    static CircularArc empty(const Disk& carrier) {
        return CircularArc(carrier, Kind::Empty, 0.0, 0.0);
    }
    static CircularArc full(const Disk& carrier) {
        return CircularArc(carrier, Kind::Full, 0.0, two_pi());
    }
    static CircularArc partial(const Disk& carrier, double start, double extent);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_full() const { return kind_ == Kind::Full; }
    const Disk& carrier() const { return carrier_; }

    double start_angle() const { return start_; }
    double extent() const { return extent_; }
    double end_angle() const { return start_ + extent_; }

    Point point_at(double theta) const {
        return {carrier_.center.x + carrier_.radius * std::cos(theta),
                carrier_.center.y + carrier_.radius * std::sin(theta)};
    }
    Point midpoint() const { return point_at(start_ + extent_ / 2.0); }

    // Open containment: arc endpoints do not count.
    bool contains_angle(double theta) const;

    // Sub-intervals (start, extent) of this arc lying inside the closed
    // disk, in arc order; at most two pieces.
    std::vector<std::pair<double, double>> clip_to_disk(const Disk& d) const;

    static double two_pi() { return 6.283185307179586476925286766559; }
    static double normalize_angle(double theta);

private:
    CircularArc(const Disk& carrier, Kind kind, double start, double extent)
        : carrier_(carrier), kind_(kind), start_(start), extent_(extent) {}

    Disk carrier_;
    Kind kind_;
    double start_;
    double extent_;
};

// The open portion of the carrier's boundary strictly outside the clip
// disk: empty when the boundary is contained in the clip, the full
// circle when the disks are disjoint.
CircularArc arc_outside_disk(const Disk& carrier, const Disk& clip);

// True iff every point of the open arc lies in the interior of d.
// Decided from the boundary intersections plus midpoint and endpoint
// membership, never by sampling. The arc must be nonempty.
bool arc_in_disk_interior(const CircularArc& arc, const Disk& d);

// Deterministic pick of a point z' on the open arc with |xz'| <= 1 or
// |pz'| <= 1: the angular midpoint of the first piece of
// arc intersected with D(x;1), else of arc intersected with D(p;1), else
// nothing. An empty result is a value, not an error.
std::optional<Point> choose_z_prime(const CircularArc& arc, Point x, Point p);

// Randomized variant used to probe whether the constructed graph
// depends on the choice of z'; draws uniformly by arc length from the
// feasible set.
std::optional<Point> choose_z_prime_random(const CircularArc& arc, Point x, Point p,
                                           double unit_random);

} // namespace pldg
