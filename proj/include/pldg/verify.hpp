#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pldg/sim.hpp"
#include "pldg/udg.hpp"

namespace pldg::verify {

// Keil-Gutwin constant: the stretch bound the Delaunay-based
// construction guarantees over unit-disk edges.
inline const double kSpannerBound = 4.0 * 3.14159265358979323846 * std::sqrt(3.0) / 9.0;

// Delaunay faces by exhaustive enumeration: a triple is a face iff no
// other point lies strictly inside its circumdisk. Slow and obviously
// correct; this is the trust anchor the construction is tested against.
std::vector<Triangle> brute_force_delaunay_faces(std::span<const Point> pts);

// Intersection of the Delaunay triangulation and the unit-disk graph.
// Uses the brute-force enumeration up to 60 points and the standard
// construction beyond.
Graph udel_oracle(const PointSet& ps);

using EdgeId = std::pair<int, int>;

struct PlanarityResult {
    bool plane = true;
    std::optional<std::pair<EdgeId, EdgeId>> crossing;
};
// Pairwise proper-crossing test over all edges, sign-exact.
PlanarityResult is_plane(const Graph& g, const PointSet& ps);

struct ConsistencyResult {
    bool consistent = true;
    std::optional<EdgeId> witness;
};
// (u,v) in E(u) iff (u,v) in E(v) for all pairs.
ConsistencyResult is_consistent(const std::vector<std::set<int>>& edge_sets);

struct StretchResult {
    double stretch = 1.0;
    std::optional<EdgeId> worst_edge;
};
// Max over unit-disk edges (u,v) of the shortest-path length in g
// between u and v divided by |uv|; infinite if some pair is
// disconnected in g.
StretchResult stretch_factor(const Graph& g, const Graph& udg, const PointSet& ps);

struct ContainmentResult {
    bool contains = true;
    std::optional<EdgeId> missing;
};
ContainmentResult is_supergraph(const Graph& g, const Graph& udel);

struct EqualityResult {
    bool equal = true;
    std::optional<EdgeId> differing;
};
EqualityResult graphs_equal(const Graph& g1, const Graph& g2);

// Everything the construction claims, checked on one run: all-true
// flags plus a stretch within the bound certify the properties on this
// instance.
struct VerificationVerdict {
    bool plane = false;
    bool consistent = false;
    bool supergraph_of_udel = false;
    bool messages_ok = false;
    double stretch = 0.0;
    int max_messages = 0;
    int round_count = 0;
    std::optional<std::pair<EdgeId, EdgeId>> crossing;
    std::optional<EdgeId> asymmetric_edge;
    std::optional<EdgeId> missing_udel_edge;
    std::optional<EdgeId> worst_stretch_edge;

    bool pass() const {
        return plane && consistent && supergraph_of_udel && messages_ok
            && stretch <= kSpannerBound + 1e-9;
    }
};

VerificationVerdict check_run(const PointSet& ps, const RunReport& report);

} // namespace pldg::verify
