#include "pldg/generator.hpp"

#include <cmath>
#include <random>

#include "pldg/geometry.hpp"

namespace pldg {
namespace {

double orient_det(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::vector<Point> sample_points(std::mt19937_64& rng, const ExperimentConfig& cfg) {
    std::uniform_real_distribution<double> coord(0.0, cfg.region_side);
    std::vector<Point> pts;
    pts.reserve(cfg.n);
    if (cfg.generator == PointGenerator::Uniform) {
        for (int i = 0; i < cfg.n; ++i) pts.push_back({coord(rng), coord(rng)});
        return pts;
    }
    int clusters = std::max(1, cfg.n / 25);
    std::vector<Point> centers;
    for (int i = 0; i < clusters; ++i) centers.push_back({coord(rng), coord(rng)});
    std::normal_distribution<double> spread(0.0, cfg.region_side / 12.0);
    std::uniform_int_distribution<int> pick(0, clusters - 1);
    while (static_cast<int>(pts.size()) < cfg.n) {
        Point c = centers[pick(rng)];
        Point p{c.x + spread(rng), c.y + spread(rng)};
        if (p.x >= 0.0 && p.x <= cfg.region_side && p.y >= 0.0 && p.y <= cfg.region_side)
            pts.push_back(p);
    }
    return pts;
}

} // namespace

std::optional<std::string> ExperimentConfig::validate() const {
    if (n < 2) return "n must be at least 2";
    if (!(region_side > 0.0)) return "region side must be positive";
    if (trials < 1) return "trials must be at least 1";
    if (!(clearance > 0.0)) return "clearance multiplier must be positive";
    return std::nullopt;
}

std::optional<std::string> instance_clearance_report(const std::vector<Point>& pts,
                                                     double clearance) {
    const int n = static_cast<int>(pts.size());
    const double thr = clearance * kEps;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = distance(pts[i], pts[j]);
            if (d < 1e-6) return "near-coincident points";
            if (std::abs(d - 1.0) <= thr) return "pair near the unit threshold";
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (std::abs(orient_det(pts[i], pts[j], pts[k])) <= thr)
                    return "near-collinear triple";

    // Full circumcircle clearance is quartic in n; precheck it only
    // where that is cheap. Larger instances rely on the prune phase's
    // runtime guard, which rejects any run whose carrier circles come
    // too close to a neighborhood point.
    if (n <= 30) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    Point c = circumcenter(pts[i], pts[j], pts[k]);
                    double r = distance(c, pts[i]);
                    for (int m = 0; m < n; ++m) {
                        if (m == i || m == j || m == k) continue;
                        if (std::abs(distance(pts[m], c) - r) <= thr)
                            return "near-cocircular quadruple";
                    }
                }
            }
        }
    }
    return std::nullopt;
}

PointSet generate(const ExperimentConfig& config) {
    if (auto reason = config.validate())
        throw GenerationError("generate: invalid config: " + *reason);

    std::mt19937_64 rng(config.seed);
    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        std::vector<Point> pts = sample_points(rng, config);
        if (instance_clearance_report(pts, config.clearance)) continue;

        PointSet ps;
        ps.points = std::move(pts);
        ps.seed = config.seed;
        ps.generator = config.generator == PointGenerator::Uniform ? "uniform" : "clustered";
        ps.region_side = config.region_side;
        ps.clearance = config.clearance;
        if (!is_connected(build_udg(ps))) continue;
        return ps;
    }
    throw GenerationError("generate: retry budget exhausted (region too sparse?)");
}

std::uint64_t derive_seed(std::uint64_t base, int trial, int attempt) {
    return splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(trial) + 1)
                      ^ (splitmix64(static_cast<std::uint64_t>(attempt)) << 1));
}

} // namespace pldg
