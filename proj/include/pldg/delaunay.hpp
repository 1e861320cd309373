#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pldg/geometry.hpp"

namespace pldg {

// Delaunay triangulation of a small point set (a node's neighborhood).
// Faces are canonical (vertex ids ascending, faces sorted); the edge
// set is the union of face edges, plus the single edge for two points.
struct LocalTriangulation {
    std::vector<Point> points;
    std::vector<Triangle> faces;
    std::vector<std::pair<int, int>> edges; // i < j, sorted

    bool has_edge(int i, int j) const;
    std::vector<int> neighbors_of(int v) const;
    // Faces containing both endpoints: one for a hull edge, two for an
    // interior edge.
    std::vector<Triangle> faces_of_edge(int i, int j) const;
    std::vector<Triangle> faces_at_vertex(int v) const;
};

// Computes the Delaunay triangulation. Requires at least two pairwise
// distinct points in general position; collinear-only or cocircular
// input raises GeneralPositionError. Every face's circumdisk is empty
// of the remaining points.
LocalTriangulation delaunay(std::span<const Point> pts);

} // namespace pldg
