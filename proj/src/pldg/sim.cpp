#include "pldg/sim.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace pldg {
namespace {

// Static round-robin split over a worker pool; every index writes only
// its own slot, so the schedule cannot influence the result. The first
// exception wins and is rethrown on the caller.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

Neighborhood neighborhood_of(const PointSet& ps, const Graph& udg, int v) {
    Neighborhood nv;
    nv.ids.push_back(v);
    for (auto [w, len] : udg.neighbors(v)) nv.ids.push_back(w);
    std::sort(nv.ids.begin(), nv.ids.end());
    nv.pts.reserve(nv.ids.size());
    for (std::size_t i = 0; i < nv.ids.size(); ++i) {
        nv.pts.push_back(ps.points[nv.ids[i]]);
        if (nv.ids[i] == v) nv.self_local = static_cast<int>(i);
    }
    return nv;
}

} // namespace

RunReport run(const PointSet& ps, Variant variant, const RunOptions& options) {
    const int n = ps.size();
    Graph udg = build_udg(ps);

    RunReport report;
    report.variant = variant;
    report.round_count = 1;
    report.udg_connected = is_connected(udg);
    report.message_counts.assign(n, 0);
    report.edge_sets.resize(n);
    report.traces.resize(n);

    std::vector<NodeState> states(n);
    std::vector<std::optional<BroadcastMessage>> messages(n);

    parallel_for(n, options.threads, [&](int v) {
        auto [state, msg] = broadcast_phase(v, neighborhood_of(ps, udg, v), variant);
        states[v] = std::move(state);
        messages[v] = std::move(msg);
    });

    // Synchronous delivery: a broadcast reaches exactly the sender's
    // closed unit disk minus the sender itself.
    std::vector<std::vector<ReceivedMessage>> inboxes(n);
    for (int x = 0; x < n; ++x) {
        if (!messages[x]) continue;
        for (auto [v, len] : udg.neighbors(x))
            inboxes[v].push_back({ps.points[x], *messages[x]});
    }

    std::vector<std::vector<RemovalCertificate>> certs(n);
    parallel_for(n, options.threads, [&](int v) {
        std::vector<PruneUnit> shuffled;
        const std::vector<PruneUnit>* order = nullptr;
        if (options.message_order_seed) {
            shuffled = default_prune_order(inboxes[v]);
            std::mt19937_64 rng(*options.message_order_seed
                                ^ (0x9e3779b97f4a7c15ull * (v + 1)));
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            order = &shuffled;
        }
        prune_phase(states[v], inboxes[v], variant, certs[v], order, options.prune);
    });

    for (int v = 0; v < n; ++v) {
        report.message_counts[v] = messages[v] ? messages[v]->point_count() : 0;
        for (int y : states[v].final_edges_global()) report.edge_sets[v].insert(y);
        report.traces[v] = std::move(states[v].trace);
        for (auto& c : certs[v]) report.certificates.push_back(std::move(c));
    }
    return report;
}

Graph report_graph(const PointSet& ps, const RunReport& report) {
    Graph g(ps.size());
    for (int v = 0; v < static_cast<int>(report.edge_sets.size()); ++v)
        for (int y : report.edge_sets[v])
            if (!g.has_edge(v, y))
                g.add_edge(v, y, distance(ps.points[v], ps.points[y]));
    return g;
}

MessageStats count_messages(const RunReport& report) {
    MessageStats stats;
    for (int c : report.message_counts) {
        stats.max = std::max(stats.max, c);
        ++stats.histogram[c];
    }
    return stats;
}

namespace {

// Final incident edges as location pairs, comparable across runs with
// different vertex numbering.
std::vector<std::pair<Point, Point>> edge_geometry(const PointSet& ps,
                                                   const RunReport& report, int u) {
    std::vector<std::pair<Point, Point>> out;
    for (int y : report.edge_sets[u]) {
        Point a = ps.points[u], b = ps.points[y];
        if (lex_less(b, a)) std::swap(a, b);
        out.push_back({a, b});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return lex_less(a.first, b.first)
            || (a.first == b.first && lex_less(a.second, b.second));
    });
    return out;
}

} // namespace

bool locality_check(const PointSet& ps, const RunReport& full_report, Variant variant,
                    int u, double k) {
    Graph udg = build_udg(ps);
    std::vector<int> ids = neighborhood(udg, u, k);
    PointSet sub = subset(ps, ids);
    int u_sub = static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), u) - ids.begin());

    RunReport sub_report = run(sub, variant);
    if (full_report.traces[u] != sub_report.traces[u_sub]) return false;
    return edge_geometry(ps, full_report, u) == edge_geometry(sub, sub_report, u_sub);
}

bool locality_check(const PointSet& ps, Variant variant, int u, double k) {
    return locality_check(ps, run(ps, variant), variant, u, k);
}

} // namespace pldg
