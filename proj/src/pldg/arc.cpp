#include "pldg/arc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pldg {
namespace {

constexpr double kAngleEps = 1e-12;

// Portion of the carrier circle's boundary inside the closed disk d,
// as an angular interval on the carrier.
struct InsidePortion {
    enum class Kind { None, All, Span } kind;
    double start = 0.0;  // normalized
    double extent = 0.0; // (0, 2*pi)
};

InsidePortion inside_portion(const Disk& carrier, const Disk& d) {
    Point to_d = d.center - carrier.center;
    double dist = norm(to_d);
    if (dist <= 1e-15) {
        return {carrier.radius <= d.radius + kEps ? InsidePortion::Kind::All
                                                  : InsidePortion::Kind::None};
    }
    // Half-angle of the inside span around the direction toward d's
    // center, by the law of cosines on (dist, r_carrier, r_d).
    double cos_half = (dist * dist + carrier.radius * carrier.radius - d.radius * d.radius)
                    / (2.0 * dist * carrier.radius);
    if (cos_half <= -1.0) return {InsidePortion::Kind::All};
    if (cos_half >= 1.0) return {InsidePortion::Kind::None};
    double half = std::acos(cos_half);
    double toward = CircularArc::normalize_angle(std::atan2(to_d.y, to_d.x));
    return {InsidePortion::Kind::Span, CircularArc::normalize_angle(toward - half),
            2.0 * half};
}

} // namespace

double CircularArc::normalize_angle(double theta) {
    double t = std::fmod(theta, two_pi());
    if (t < 0.0) t += two_pi();
    if (t >= two_pi()) t = 0.0;
    return t;
}

CircularArc CircularArc::partial(const Disk& carrier, double start, double extent) {
    if (!(extent > 0.0) || extent > two_pi())
        throw std::invalid_argument("CircularArc::partial: extent out of range");
    return CircularArc(carrier, Kind::Partial, normalize_angle(start), extent);
}

bool CircularArc::contains_angle(double theta) const {
    switch (kind_) {
    case Kind::Empty:
        return false;
    case Kind::Full:
        return true;
    case Kind::Partial: {
        double t = normalize_angle(theta - start_);
        return t > 0.0 && t < extent_;
    }
    }
    return false;
}

std::vector<std::pair<double, double>> CircularArc::clip_to_disk(const Disk& d) const {
    if (kind_ == Kind::Empty) return {};
    InsidePortion in = inside_portion(carrier_, d);
    if (in.kind == InsidePortion::Kind::None) return {};
    if (in.kind == InsidePortion::Kind::All) return {{start_, extent_}};

    // Work in the arc's own parameter, offsets from start_ in [0, extent_].
    double shift = normalize_angle(in.start - start_);
    std::vector<std::pair<double, double>> raw;
    if (shift + in.extent <= two_pi()) {
        raw.push_back({shift, shift + in.extent});
    } else {
        raw.push_back({shift, two_pi()});
        raw.push_back({0.0, shift + in.extent - two_pi()});
    }
    std::vector<std::pair<double, double>> out;
    for (auto [lo, hi] : raw) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, extent_);
        if (hi - lo > kAngleEps)
            out.push_back({normalize_angle(start_ + lo), hi - lo});
    }
    return out;
}

CircularArc arc_outside_disk(const Disk& carrier, const Disk& clip) {
    InsidePortion in = inside_portion(carrier, clip);
    switch (in.kind) {
    case InsidePortion::Kind::All:
        return CircularArc::empty(carrier);
    case InsidePortion::Kind::None:
        return CircularArc::full(carrier);
    case InsidePortion::Kind::Span:
        return CircularArc::partial(carrier,
                                    CircularArc::normalize_angle(in.start + in.extent),
                                    CircularArc::two_pi() - in.extent);
    }
    return CircularArc::empty(carrier);
}

bool arc_in_disk_interior(const CircularArc& arc, const Disk& d) {
    if (arc.is_empty())
        throw std::invalid_argument("arc_in_disk_interior: empty arc");

    for (const Point& q : circle_circle_intersections(arc.carrier(), d)) {
        Point rel = q - arc.carrier().center;
        if (arc.contains_angle(std::atan2(rel.y, rel.x))) return false;
    }
    if (!d.contains_interior(arc.midpoint())) return false;
    if (arc.kind() == CircularArc::Kind::Partial) {
        if (!d.contains_closed(arc.point_at(arc.start_angle()))) return false;
        if (!d.contains_closed(arc.point_at(arc.end_angle()))) return false;
    }
    return true;
}

namespace {

std::vector<std::pair<double, double>> feasible_pieces(const CircularArc& arc,
                                                       Point target) {
    auto pieces = arc.clip_to_disk(Disk{target, 1.0});
    // First piece along the arc, measured from the arc's start.
    std::sort(pieces.begin(), pieces.end(),
              [&](const auto& a, const auto& b) {
                  return CircularArc::normalize_angle(a.first - arc.start_angle())
                       < CircularArc::normalize_angle(b.first - arc.start_angle());
              });
    return pieces;
}

} // namespace

std::optional<Point> choose_z_prime(const CircularArc& arc, Point x, Point p) {
    if (arc.is_empty()) return std::nullopt;
    for (Point target : {x, p}) {
        auto pieces = feasible_pieces(arc, target);
        if (!pieces.empty()) {
            auto [start, extent] = pieces.front();
            return arc.point_at(start + extent / 2.0);
        }
    }
    return std::nullopt;
}

std::optional<Point> choose_z_prime_random(const CircularArc& arc, Point x, Point p,
                                           double unit_random) {
    if (arc.is_empty()) return std::nullopt;
    std::vector<std::pair<double, double>> all;
    for (Point target : {x, p})
        for (auto piece : feasible_pieces(arc, target)) all.push_back(piece);
    if (all.empty()) return std::nullopt;
    double total = 0.0;
    for (auto& [start, extent] : all) total += extent;
    double pick = std::clamp(unit_random, 0.0, 1.0) * total;
    for (auto& [start, extent] : all) {
        if (pick <= extent) {
            // Keep strictly inside the open piece.
            double t = std::clamp(pick, extent * 1e-6, extent * (1.0 - 1e-6));
            return arc.point_at(start + t);
        }
        pick -= extent;
    }
    auto [start, extent] = all.back();
    return arc.point_at(start + extent / 2.0);
}

} // namespace pldg
