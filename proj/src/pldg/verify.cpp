#include "pldg/verify.hpp"

#include <algorithm>
#include <cmath>

#include "pldg/delaunay.hpp"
#include "pldg/predicates.hpp"

namespace pldg::verify {

std::vector<Triangle> brute_force_delaunay_faces(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<Triangle> faces;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (orient(pts[i], pts[j], pts[k]) == 0)
                    throw GeneralPositionError("brute_force_delaunay: collinear triple");
                bool empty = true;
                for (int m = 0; m < n && empty; ++m) {
                    if (m == i || m == j || m == k) continue;
                    int s = in_circle(pts[i], pts[j], pts[k], pts[m]);
                    if (s == 0)
                        throw GeneralPositionError("brute_force_delaunay: cocircular points");
                    if (s > 0) empty = false;
                }
                if (empty) faces.push_back({i, j, k});
            }
        }
    }
    return faces;
}

Graph udel_oracle(const PointSet& ps) {
    const int n = ps.size();
    Graph g(n);
    if (n < 2) return g;

    std::vector<std::pair<int, int>> dt_edges;
    if (n == 2) {
        dt_edges.push_back({0, 1});
    } else if (n <= 60) {
        std::set<std::pair<int, int>> edge_set;
        for (const Triangle& t : brute_force_delaunay_faces(ps.points)) {
            edge_set.insert({t.a, t.b});
            edge_set.insert({t.a, t.c});
            edge_set.insert({t.b, t.c});
        }
        dt_edges.assign(edge_set.begin(), edge_set.end());
    } else {
        dt_edges = delaunay(ps.points).edges;
    }

    for (auto [u, v] : dt_edges) {
        double d = distance(ps.points[u], ps.points[v]);
        if (d <= 1.0) g.add_edge(u, v, d);
    }
    return g;
}

PlanarityResult is_plane(const Graph& g, const PointSet& ps) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_cross(ps.points[a], ps.points[b], ps.points[c], ps.points[d]))
                return {false, std::make_pair(edges[i], edges[j])};
        }
    }
    return {true, std::nullopt};
}

ConsistencyResult is_consistent(const std::vector<std::set<int>>& edge_sets) {
    for (int u = 0; u < static_cast<int>(edge_sets.size()); ++u) {
        for (int v : edge_sets[u]) {
            if (v < 0 || v >= static_cast<int>(edge_sets.size())
                || !edge_sets[v].count(u)) {
                return {false, std::make_pair(std::min(u, v), std::max(u, v))};
            }
        }
    }
    return {true, std::nullopt};
}

StretchResult stretch_factor(const Graph& g, const Graph& udg, const PointSet&) {
    StretchResult result;
    for (int u = 0; u < udg.vertex_count(); ++u) {
        bool has_forward = false;
        for (auto [v, len] : udg.neighbors(u))
            if (v > u) has_forward = true;
        if (!has_forward) continue;

        auto dist = dijkstra(g, u);
        for (auto [v, len] : udg.neighbors(u)) {
            if (v < u) continue;
            double ratio = dist[v] / len;
            if (ratio > result.stretch) {
                result.stretch = ratio;
                result.worst_edge = std::make_pair(u, v);
            }
        }
    }
    return result;
}

ContainmentResult is_supergraph(const Graph& g, const Graph& udel) {
    for (auto [u, v] : udel.edges())
        if (!g.has_edge(u, v)) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

EqualityResult graphs_equal(const Graph& g1, const Graph& g2) {
    auto e1 = g1.edges();
    auto e2 = g2.edges();
    if (e1 == e2) return {true, std::nullopt};
    for (std::size_t i = 0; i < std::max(e1.size(), e2.size()); ++i) {
        if (i >= e1.size()) return {false, e2[i]};
        if (i >= e2.size()) return {false, e1[i]};
        if (e1[i] != e2[i]) return {false, e1[i]};
    }
    return {false, std::nullopt};
}

VerificationVerdict check_run(const PointSet& ps, const RunReport& report) {
    VerificationVerdict verdict;
    Graph g = report_graph(ps, report);
    Graph udg = build_udg(ps);

    auto planar = is_plane(g, ps);
    verdict.plane = planar.plane;
    verdict.crossing = planar.crossing;

    auto cons = is_consistent(report.edge_sets);
    verdict.consistent = cons.consistent;
    verdict.asymmetric_edge = cons.witness;

    auto contain = is_supergraph(g, udel_oracle(ps));
    verdict.supergraph_of_udel = contain.contains;
    verdict.missing_udel_edge = contain.missing;

    auto stretch = stretch_factor(g, udg, ps);
    verdict.stretch = stretch.stretch;
    verdict.worst_stretch_edge = stretch.worst_edge;

    auto stats = count_messages(report);
    verdict.max_messages = stats.max;
    verdict.round_count = report.round_count;
    int budget = report.variant == Variant::Pldg ? 6 : 5;
    verdict.messages_ok = stats.max <= budget && report.round_count == 1;
    return verdict;
}

} // namespace pldg::verify
