#include "pldg/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "pldg/predicates.hpp"

namespace pldg {

bool LocalTriangulation::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<int> LocalTriangulation::neighbors_of(int v) const {
    std::vector<int> out;
    for (auto [i, j] : edges) {
        if (i == v) out.push_back(j);
        else if (j == v) out.push_back(i);
    }
    return out;
}

std::vector<Triangle> LocalTriangulation::faces_of_edge(int i, int j) const {
    std::vector<Triangle> out;
    for (const Triangle& t : faces) {
        int hits = (t.a == i || t.b == i || t.c == i) + (t.a == j || t.b == j || t.c == j);
        if (hits == 2) out.push_back(t);
    }
    return out;
}

std::vector<Triangle> LocalTriangulation::faces_at_vertex(int v) const {
    std::vector<Triangle> out;
    for (const Triangle& t : faces)
        if (t.a == v || t.b == v || t.c == v) out.push_back(t);
    return out;
}

namespace {

// Incremental insertion with an explicit infinite vertex: hull edges
// border a ring of infinite faces, so every directed edge has a twin
// and cavity walks need no boundary special cases.
constexpr int kInf = -1;

inline std::uint64_t edge_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a + 1)) << 32)
         | static_cast<std::uint32_t>(b + 1);
}

struct Mesh {
    std::span<const Point> pts;
    std::vector<std::array<int, 3>> faces;
    std::vector<bool> alive;
    std::unordered_map<std::uint64_t, int> by_edge;

    int add_face(int a, int b, int c) {
        int id = static_cast<int>(faces.size());
        faces.push_back({a, b, c});
        alive.push_back(true);
        by_edge[edge_key(a, b)] = id;
        by_edge[edge_key(b, c)] = id;
        by_edge[edge_key(c, a)] = id;
        return id;
    }

    void kill_face(int id) {
        const auto& f = faces[id];
        by_edge.erase(edge_key(f[0], f[1]));
        by_edge.erase(edge_key(f[1], f[2]));
        by_edge.erase(edge_key(f[2], f[0]));
        alive[id] = false;
    }

    // For an infinite face, the two finite vertices in cyclic order
    // after the infinite one form the directed hull edge.
    std::pair<int, int> hull_edge(int id) const {
        const auto& f = faces[id];
        for (int i = 0; i < 3; ++i)
            if (f[i] == kInf) return {f[(i + 1) % 3], f[(i + 2) % 3]};
        throw std::logic_error("hull_edge: finite face");
    }

    bool is_finite(int id) const {
        const auto& f = faces[id];
        return f[0] != kInf && f[1] != kInf && f[2] != kInf;
    }

    // Whether p lies strictly inside the face's circumdisk; for an
    // infinite face this is the open halfplane beyond the hull edge.
    bool in_conflict(int id, const Point& p) const {
        if (is_finite(id)) {
            const auto& f = faces[id];
            int s = in_circle_oriented(pts[f[0]], pts[f[1]], pts[f[2]], p);
            if (s == 0) throw GeneralPositionError("delaunay: four cocircular points");
            return s > 0; // finite faces are stored counterclockwise
        }
        // The hull edge of an infinite face runs opposite the hull
        // orientation, so the outer region lies strictly to its left.
        auto [u, w] = hull_edge(id);
        int s = orient(pts[u], pts[w], p);
        if (s == 0) throw GeneralPositionError("delaunay: three collinear points");
        return s > 0;
    }

    void insert(int v) {
        const Point& p = pts[v];
        int seed = -1;
        for (int id = 0; id < static_cast<int>(faces.size()); ++id) {
            if (alive[id] && in_conflict(id, p)) {
                seed = id;
                break;
            }
        }
        if (seed < 0) throw std::logic_error("delaunay: no conflict face found");

        // Flood the cavity of conflicting faces.
        std::vector<int> cavity;
        std::vector<char> in_cavity(faces.size(), 0);
        std::deque<int> queue{seed};
        in_cavity[seed] = 1;
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            cavity.push_back(id);
            const auto f = faces[id];
            for (int i = 0; i < 3; ++i) {
                int twin = by_edge.at(edge_key(f[(i + 1) % 3], f[i]));
                if (!in_cavity[twin] && in_conflict(twin, p)) {
                    in_cavity[twin] = 1;
                    queue.push_back(twin);
                }
            }
        }

        // Directed boundary edges keep their orientation in the new fan.
        std::vector<std::pair<int, int>> boundary;
        for (int id : cavity) {
            const auto f = faces[id];
            for (int i = 0; i < 3; ++i) {
                int a = f[i], b = f[(i + 1) % 3];
                if (!in_cavity[by_edge.at(edge_key(b, a))]) boundary.push_back({a, b});
            }
        }
        for (int id : cavity) kill_face(id);
        for (auto [a, b] : boundary) add_face(a, b, v);
    }
};

} // namespace

LocalTriangulation delaunay(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 2) throw std::invalid_argument("delaunay: need at least two points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j])
                throw GeneralPositionError("delaunay: duplicate points");

    LocalTriangulation out;
    out.points.assign(pts.begin(), pts.end());
    if (n == 2) {
        out.edges = {{0, 1}};
        return out;
    }

    Mesh mesh{pts, {}, {}, {}};
    int o = orient(pts[0], pts[1], pts[2]);
    if (o == 0) throw GeneralPositionError("delaunay: three collinear points");
    int a = 0, b = o > 0 ? 1 : 2, c = o > 0 ? 2 : 1;
    mesh.add_face(a, b, c);
    mesh.add_face(b, a, kInf);
    mesh.add_face(c, b, kInf);
    mesh.add_face(a, c, kInf);
    for (int v = 3; v < n; ++v) mesh.insert(v);

    std::set<std::pair<int, int>> edge_set;
    for (int id = 0; id < static_cast<int>(mesh.faces.size()); ++id) {
        if (!mesh.alive[id] || !mesh.is_finite(id)) continue;
        auto f = mesh.faces[id];
        std::sort(f.begin(), f.end());
        out.faces.push_back({f[0], f[1], f[2]});
        edge_set.insert({f[0], f[1]});
        edge_set.insert({f[0], f[2]});
        edge_set.insert({f[1], f[2]});
    }
    std::sort(out.faces.begin(), out.faces.end());
    out.edges.assign(edge_set.begin(), edge_set.end());
    return out;
}

} // namespace pldg
