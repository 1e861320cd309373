#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pldg/geometry.hpp"

namespace pldg {

// An indexed set of node locations; the unit of length is the radio
// range. Generator metadata travels with the points so runs can be
// reproduced from a serialized instance.
struct PointSet {
    std::vector<Point> points;
    std::uint64_t seed = 0;
    std::string generator = "manual";
    double region_side = 0.0;
    double clearance = 10.0;

    int size() const { return static_cast<int>(points.size()); }
};

// Undirected graph over a point set with Euclidean edge lengths.
// Adjacency is symmetric at the container level; consistency of the
// per-node edge sets a protocol produces is a separate check.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    void add_edge(int u, int v, double length);
    bool has_edge(int u, int v) const;
    const std::vector<std::pair<int, double>>& neighbors(int u) const { return adj_[u]; }
    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Unit-disk graph: edge (u,v) iff u != v and |uv| <= 1.
Graph build_udg(const PointSet& ps);

// Euclidean-weighted shortest-path distances from u to every vertex;
// kUnreachable where no path exists.
std::vector<double> dijkstra(const Graph& g, int u);

double shortest_path_length(const Graph& g, int u, int v);

// Vertices whose weighted shortest-path distance from u is at most k,
// ascending; always contains u. A hair of slack keeps the set a
// superset of the exact neighborhood when a path length lands on the
// threshold.
std::vector<int> neighborhood(const Graph& g, int u, double k);

bool is_connected(const Graph& g);

// Point set restricted to the given vertex ids (ascending), keeping
// metadata.
PointSet subset(const PointSet& ps, const std::vector<int>& ids);

} // namespace pldg
