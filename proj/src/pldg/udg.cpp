#include "pldg/udg.hpp"

#include <algorithm>
#include <queue>

namespace pldg {

std::size_t Graph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& list : adj_) deg += list.size();
    return deg / 2;
}

void Graph::add_edge(int u, int v, double length) {
    adj_[u].push_back({v, length});
    adj_[v].push_back({u, length});
}

bool Graph::has_edge(int u, int v) const {
    for (auto [w, len] : adj_[u])
        if (w == v) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (auto [v, len] : adj_[u])
            if (u < v) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

Graph build_udg(const PointSet& ps) {
    Graph g(ps.size());
    for (int u = 0; u < ps.size(); ++u) {
        for (int v = u + 1; v < ps.size(); ++v) {
            double d = distance(ps.points[u], ps.points[v]);
            if (d <= 1.0) g.add_edge(u, v, d);
        }
    }
    return g;
}

std::vector<double> dijkstra(const Graph& g, int u) {
    std::vector<double> dist(g.vertex_count(), kUnreachable);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[u] = 0.0;
    heap.push({0.0, u});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (auto [w, len] : g.neighbors(v)) {
            double nd = d + len;
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist;
}

double shortest_path_length(const Graph& g, int u, int v) {
    if (u == v) return 0.0;
    return dijkstra(g, u)[v];
}

std::vector<int> neighborhood(const Graph& g, int u, double k) {
    auto dist = dijkstra(g, u);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] <= k + kEps) out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (auto [w, len] : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push(w);
            }
        }
    }
    return count == g.vertex_count();
}

PointSet subset(const PointSet& ps, const std::vector<int>& ids) {
    PointSet out;
    out.seed = ps.seed;
    out.generator = ps.generator;
    out.region_side = ps.region_side;
    out.clearance = ps.clearance;
    out.points.reserve(ids.size());
    for (int id : ids) out.points.push_back(ps.points[id]);
    return out;
}

} // namespace pldg
