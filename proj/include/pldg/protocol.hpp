#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pldg/arc.hpp"
#include "pldg/delaunay.hpp"
#include "pldg/trace.hpp"

namespace pldg {

// The two per-node algorithm variants: the preliminary one tags each
// broadcast with the sender's location (at most 6 point locations per
// node), the improved one sends circumcenters only (at most 5) and
// recovers the carrier disk from the nearest neighbor.
enum class Variant { Pldg, PldgPrime };

inline const char* variant_name(Variant v) {
    return v == Variant::Pldg ? "pldg" : "pldg_prime";
}

// What a node emits in its single broadcasting step. A message unit is
// one point location, so the cost is centers plus one when the sender
// location is attached.
struct BroadcastMessage {
    std::optional<Point> sender_location;
    std::vector<Point> centers;

    int point_count() const {
        return static_cast<int>(centers.size()) + (sender_location ? 1 : 0);
    }
};

// A node's neighborhood: global vertex ids plus coordinates, including
// the node itself.
struct Neighborhood {
    std::vector<int> ids;
    std::vector<Point> pts;
    int self_local = -1;
};

// Everything needed to replay one edge removal: the triggering center,
// the recovered boundary pair, the chosen z', and the witness disk
// whose interior swallowed the arc.
struct RemovalCertificate {
    int node = -1;
    int neighbor = -1;
    Point node_pt, neighbor_pt;
    Point center;
    Point boundary_x, boundary_p;
    Point z_prime;
    Disk witness;
};

struct NodeState {
    int id = -1;
    Point location;
    Neighborhood nbr;
    LocalTriangulation ldt;
    std::set<int> edge_set; // local indices of surviving incident edges
    std::vector<TraceEntry> trace;

    std::vector<int> final_edges_global() const;
};

// Test hooks for probing choices the algorithm leaves open: the z'
// selection rule and the empty-disk witness construction. Defaults
// reproduce the deterministic documented behavior.
struct PruneConfig {
    std::optional<std::uint64_t> z_prime_seed;
    double witness_offset = 1.0; // hull-edge outward displacement
    double witness_mix = 0.5;    // interior-edge circumcenter blend
};

// Lines 1-8: compute the local Delaunay triangulation, keep the
// incident edges, and broadcast the circumcenters of the faces whose
// apex angle at the node exceeds pi/3 (sorted by angle around the
// node). No message is produced when no face qualifies.
std::pair<NodeState, std::optional<BroadcastMessage>>
broadcast_phase(int v, const Neighborhood& nv, Variant variant);

// A disk whose boundary meets the neighborhood in exactly {v, y} and
// whose interior avoids it, certifying (v,y) as a local Delaunay edge.
// Interior edge: centered between the two adjacent circumcenters; hull
// edge: adjacent circumcenter pushed outward along the edge normal;
// two-point neighborhood: the diametral disk. The postcondition is
// verified explicitly; failure raises WitnessError.
Disk candidate_empty_disk(const NodeState& state, int y_local,
                          const PruneConfig& cfg = {});

struct ReceivedMessage {
    Point sender_location; // harness metadata; the algorithm reads it only for Pldg
    BroadcastMessage msg;
};

// One (message, center) pair in the deterministic processing order.
struct PruneUnit {
    std::size_t msg_index = 0;
    std::size_t center_index = 0;
};

std::vector<PruneUnit> default_prune_order(const std::vector<ReceivedMessage>& received);

// Lines 9-19 (or 9-22): for each received center, recover the carrier
// disk, require exactly two neighborhood points on its boundary,
// compute the arc outside the node's unit disk, choose z', and remove
// every surviving incident edge whose witness disk swallows the arc
// while the edge crosses xz' or pz'. Removals are logged as
// certificates and apply immediately.
void prune_phase(NodeState& state, const std::vector<ReceivedMessage>& received,
                 Variant variant, std::vector<RemovalCertificate>& certificates,
                 const std::vector<PruneUnit>* order = nullptr,
                 const PruneConfig& cfg = {});

} // namespace pldg
