#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pldg/protocol.hpp"
#include "pldg/udg.hpp"

namespace pldg {

struct RunOptions {
    int threads = 1;
    // When set, each node processes its received centers in a seeded
    // random order instead of the canonical one; the final edge sets
    // must not change.
    std::optional<std::uint64_t> message_order_seed;
    PruneConfig prune;
};

// Outcome of one synchronous execution: per-node message costs, the
// single round, the surviving per-node edge sets, removal certificates,
// and per-node traces for the locality re-execution check.
struct RunReport {
    Variant variant = Variant::PldgPrime;
    int round_count = 1;
    bool udg_connected = true;
    std::vector<int> message_counts;          // point locations broadcast per node
    std::vector<std::set<int>> edge_sets;     // global neighbor ids per node
    std::vector<RemovalCertificate> certificates;
    std::vector<std::vector<TraceEntry>> traces;
};

// Runs the one-round protocol on every node: broadcast phase for all,
// delivery to the closed unit disk minus self, prune phase for all.
// Node phases may execute on a worker pool; results are identical for
// any schedule.
RunReport run(const PointSet& ps, Variant variant, const RunOptions& options = {});

// Union of the per-node edge sets, with Euclidean lengths.
Graph report_graph(const PointSet& ps, const RunReport& report);

struct MessageStats {
    int max = 0;
    std::map<int, int> histogram; // point-location count -> number of nodes
};
MessageStats count_messages(const RunReport& report);

// Re-runs the full algorithm on the weighted k-neighborhood of u and
// reports whether u's trace and final edge set are unchanged. The
// algorithm is 2-local, so k = 2 must always come back true; k = 1 is
// the negative control.
bool locality_check(const PointSet& ps, const RunReport& full_report, Variant variant,
                    int u, double k = 2.0);
bool locality_check(const PointSet& ps, Variant variant, int u, double k = 2.0);

} // namespace pldg
