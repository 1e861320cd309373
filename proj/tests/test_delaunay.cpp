#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pldg/delaunay.hpp"
#include "pldg/predicates.hpp"
#include "pldg/verify.hpp"

#include "support.hpp"

using namespace pldg;

namespace {

// Reject sampled sets that the construction is entitled to refuse.
bool in_general_position(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
                for (int m = k + 1; m < n; ++m)
                    if (in_circle(pts[i], pts[j], pts[k], pts[m]) == 0) return false;
            }
    return true;
}

} // namespace

TEST_CASE("delaunay: single triangle") {
    LocalTriangulation t = delaunay(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
    REQUIRE(t.faces.size() == 1);
    CHECK(t.faces[0] == Triangle{0, 1, 2});
    CHECK(t.edges.size() == 3);
}

TEST_CASE("delaunay: two points") {
    LocalTriangulation t = delaunay(std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(t.faces.empty());
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("delaunay: four points match the enumeration oracle") {
    std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {1.1, 1.1}};
    LocalTriangulation t = delaunay(pts);
    auto oracle = verify::brute_force_delaunay_faces(pts);
    std::sort(oracle.begin(), oracle.end());
    CHECK(t.faces == oracle);
}

TEST_CASE("delaunay: degenerate inputs are rejected") {
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}),
                    GeneralPositionError);
    // Unit square: four cocircular points.
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                    GeneralPositionError);
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}, {0, 0}}), GeneralPositionError);
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}}), std::invalid_argument);
}

TEST_CASE("delaunay matches the enumeration oracle on random sets") {
    std::mt19937_64 rng(31415);
    int done = 0;
    while (done < 600) {
        std::uniform_int_distribution<int> size(3, 12);
        auto pts = testsupport::random_points(rng, size(rng), 0.0, 2.0);
        if (!in_general_position(pts)) continue;
        LocalTriangulation t = delaunay(pts);
        auto oracle = verify::brute_force_delaunay_faces(pts);
        std::sort(oracle.begin(), oracle.end());
        CHECK(t.faces == oracle);
        ++done;
    }
}

TEST_CASE("delaunay faces have empty circumdisks and edges do not cross") {
    std::mt19937_64 rng(271828);
    int done = 0;
    while (done < 80) {
        auto pts = testsupport::random_points(rng, 24, 0.0, 3.0);
        LocalTriangulation t;
        try {
            t = delaunay(pts);
        } catch (const GeneralPositionError&) {
            continue;
        }
        for (const Triangle& f : t.faces) {
            for (int m = 0; m < static_cast<int>(pts.size()); ++m) {
                if (m == f.a || m == f.b || m == f.c) continue;
                CHECK(in_circle(pts[f.a], pts[f.b], pts[f.c], pts[m]) == -1);
            }
        }
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < t.edges.size(); ++j) {
                auto [a, b] = t.edges[i];
                auto [c, d] = t.edges[j];
                if (a == c || a == d || b == c || b == d) continue;
                CHECK_FALSE(segments_cross(pts[a], pts[b], pts[c], pts[d]));
            }
        }
        // Every face edge is in the edge set and vice versa.
        std::set<std::pair<int, int>> from_faces;
        for (const Triangle& f : t.faces) {
            from_faces.insert({f.a, f.b});
            from_faces.insert({f.a, f.c});
            from_faces.insert({f.b, f.c});
        }
        CHECK(std::vector<std::pair<int, int>>(from_faces.begin(), from_faces.end())
              == t.edges);
        ++done;
    }
}

TEST_CASE("LocalTriangulation adjacency queries") {
    LocalTriangulation t = delaunay(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1.1, 1.1}});
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 0));
    // Edge (1,2) is the shared diagonal: two adjacent faces.
    CHECK(t.faces_of_edge(1, 2).size() == 2);
    CHECK(t.faces_of_edge(0, 1).size() == 1);
    auto at0 = t.faces_at_vertex(0);
    CHECK(at0.size() == 1);
    auto nbrs = t.neighbors_of(1);
    CHECK(std::find(nbrs.begin(), nbrs.end(), 0) != nbrs.end());
}
