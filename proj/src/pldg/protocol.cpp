#include "pldg/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pldg/predicates.hpp"

namespace pldg {
namespace {

// True iff the angle at v in triangle (u, v, w) strictly exceeds pi/3,
// i.e. cos(angle) < 1/2.
bool apex_angle_exceeds_third_pi(Point u, Point v, Point w) {
    Point a = u - v;
    Point b = w - v;
    return 2.0 * dot(a, b) < std::sqrt(dot(a, a) * dot(b, b));
}

std::uint64_t hash_points_sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    TraceHasher h;
    for (Point p : pts) h.add(p);
    return h.value();
}

std::uint64_t hash_ldt(const LocalTriangulation& ldt) {
    TraceHasher h;
    std::vector<std::pair<Point, Point>> segs;
    for (auto [i, j] : ldt.edges) {
        Point p = ldt.points[i], q = ldt.points[j];
        if (lex_less(q, p)) std::swap(p, q);
        segs.push_back({p, q});
    }
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) {
        return lex_less(a.first, b.first)
            || (a.first == b.first && lex_less(a.second, b.second));
    });
    for (auto& [p, q] : segs) h.add(p).add(q);
    for (const Triangle& t : ldt.faces) {
        std::vector<Point> tri{ldt.points[t.a], ldt.points[t.b], ldt.points[t.c]};
        std::sort(tri.begin(), tri.end(), lex_less);
        for (Point p : tri) h.add(p);
    }
    return h.value();
}

} // namespace

std::vector<int> NodeState::final_edges_global() const {
    std::vector<int> out;
    out.reserve(edge_set.size());
    for (int y : edge_set) out.push_back(nbr.ids[y]);
    return out;
}

std::pair<NodeState, std::optional<BroadcastMessage>>
broadcast_phase(int v, const Neighborhood& nv, Variant variant) {
    NodeState state;
    state.id = v;
    state.nbr = nv;
    state.location = nv.pts[nv.self_local];

    if (nv.pts.size() < 2) {
        state.trace.push_back({"ldt", hash_points_sorted(nv.pts), 0});
        return {std::move(state), std::nullopt};
    }

    state.ldt = delaunay(nv.pts);
    for (int y : state.ldt.neighbors_of(nv.self_local)) state.edge_set.insert(y);
    state.trace.push_back(
        {"ldt", hash_points_sorted(nv.pts), hash_ldt(state.ldt)});

    std::vector<Point> centers;
    for (const Triangle& t : state.ldt.faces_at_vertex(nv.self_local)) {
        int others[2];
        int k = 0;
        for (int idx : {t.a, t.b, t.c})
            if (idx != nv.self_local) others[k++] = idx;
        Point u = state.ldt.points[others[0]];
        Point w = state.ldt.points[others[1]];
        if (apex_angle_exceeds_third_pi(u, state.location, w))
            centers.push_back(circumcenter(u, state.location, w));
    }
    std::sort(centers.begin(), centers.end(), [&](Point a, Point b) {
        Point ra = a - state.location, rb = b - state.location;
        double ta = std::atan2(ra.y, ra.x), tb = std::atan2(rb.y, rb.x);
        if (ta != tb) return ta < tb;
        return lex_less(a, b);
    });

    // At most 5 faces at a node can have apex angle > pi/3: six such
    // angles would sum past 2*pi.
    if (centers.size() > 5)
        throw std::logic_error("broadcast_phase: more than 5 wide faces at a node");

    TraceHasher ch;
    for (Point c : centers) ch.add(c);
    state.trace.push_back({"centers", 0, ch.value()});

    if (centers.empty()) return {std::move(state), std::nullopt};

    BroadcastMessage msg;
    if (variant == Variant::Pldg) msg.sender_location = state.location;
    msg.centers = std::move(centers);

    TraceHasher bh;
    bh.add(variant_name(variant));
    if (msg.sender_location) bh.add(*msg.sender_location);
    for (Point c : msg.centers) bh.add(c);
    state.trace.push_back({"broadcast", 0, bh.value()});
    return {std::move(state), std::move(msg)};
}

Disk candidate_empty_disk(const NodeState& state, int y_local, const PruneConfig& cfg) {
    const int v_local = state.nbr.self_local;
    const Point v = state.location;
    const Point y = state.nbr.pts[y_local];

    Disk disk;
    auto faces = state.ldt.faces_of_edge(v_local, y_local);
    if (faces.empty()) {
        // Two-point neighborhood: the diametral disk holds only v and y.
        disk.center = (v + y) * 0.5;
        disk.radius = distance(v, y) / 2.0;
    } else if (faces.size() == 1) {
        // Hull edge: slide the adjacent circumcenter outward along the
        // edge normal. The outer halfplane holds no neighborhood point
        // and the inner part of the disk shrinks, so the emptiness of
        // the adjacent circumdisk is preserved.
        const Triangle& t = faces[0];
        int w_local = t.a + t.b + t.c - v_local - y_local;
        Point w = state.nbr.pts[w_local];
        Point cc = circumcenter(v, y, w);
        Point e = y - v;
        Point n{-e.y, e.x};
        double len = norm(n);
        if (len <= 0.0) throw WitnessError("candidate_empty_disk: zero-length edge");
        n = n * (1.0 / len);
        Point mid = (v + y) * 0.5;
        if (dot(n, w - mid) > 0.0) n = n * -1.0;
        disk.center = cc + n * cfg.witness_offset;
        disk.radius = distance(disk.center, v);
    } else {
        // Interior edge: any disk through v,y centered between the two
        // adjacent circumcenters stays inside their union.
        const Triangle& t0 = faces[0];
        const Triangle& t1 = faces[1];
        Point c0 = circumcenter(state.nbr.pts[t0.a], state.nbr.pts[t0.b], state.nbr.pts[t0.c]);
        Point c1 = circumcenter(state.nbr.pts[t1.a], state.nbr.pts[t1.b], state.nbr.pts[t1.c]);
        disk.center = c0 * (1.0 - cfg.witness_mix) + c1 * cfg.witness_mix;
        disk.radius = distance(disk.center, v);
    }

    // Verify the defining properties rather than trusting the construction.
    double tol = kEps * std::max(1.0, disk.radius);
    for (int i = 0; i < static_cast<int>(state.nbr.pts.size()); ++i) {
        double gap = distance(state.nbr.pts[i], disk.center) - disk.radius;
        if (i == v_local || i == y_local) {
            if (std::abs(gap) > tol)
                throw WitnessError("candidate_empty_disk: endpoint off the boundary");
        } else if (gap < -tol) {
            throw WitnessError("candidate_empty_disk: neighborhood point inside witness");
        }
    }
    return disk;
}

std::vector<PruneUnit> default_prune_order(const std::vector<ReceivedMessage>& received) {
    std::vector<std::size_t> msg_order(received.size());
    for (std::size_t i = 0; i < received.size(); ++i) msg_order[i] = i;
    std::sort(msg_order.begin(), msg_order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(received[a].sender_location, received[b].sender_location);
    });
    std::vector<PruneUnit> units;
    for (std::size_t m : msg_order)
        for (std::size_t c = 0; c < received[m].msg.centers.size(); ++c)
            units.push_back({m, c});
    return units;
}

void prune_phase(NodeState& state, const std::vector<ReceivedMessage>& received,
                 Variant variant, std::vector<RemovalCertificate>& certificates,
                 const std::vector<PruneUnit>* order, const PruneConfig& cfg) {
    const Point v = state.location;
    const auto& pts = state.nbr.pts;

    {
        TraceHasher rh;
        for (const auto& r : received) {
            rh.add(static_cast<std::uint64_t>(r.msg.point_count()));
            if (r.msg.sender_location) rh.add(*r.msg.sender_location);
            for (Point c : r.msg.centers) rh.add(c);
        }
        state.trace.push_back({"recv", 0, rh.value()});
    }

    std::vector<PruneUnit> default_order;
    if (!order) {
        default_order = default_prune_order(received);
        order = &default_order;
    }

    // A center coinciding with a neighborhood point has no carrier
    // disk; such a message is malformed and dropped whole, regardless
    // of the processing order.
    std::vector<char> rejected(received.size(), 0);
    for (const PruneUnit& unit : default_prune_order(received)) {
        if (rejected[unit.msg_index]) continue;
        const ReceivedMessage& rm = received[unit.msg_index];
        const Point c = rm.msg.centers[unit.center_index];
        double reach;
        if (variant == Variant::Pldg) {
            reach = distance(c, *rm.msg.sender_location);
        } else {
            reach = std::numeric_limits<double>::infinity();
            for (int i = 0; i < static_cast<int>(pts.size()); ++i)
                if (i != state.nbr.self_local) reach = std::min(reach, distance(pts[i], c));
        }
        if (reach <= kEps) {
            rejected[unit.msg_index] = 1;
            state.trace.push_back({"message_rejected", TraceHasher().add(c).value(), 0});
        }
    }

    std::optional<std::mt19937_64> z_rng;
    if (cfg.z_prime_seed) z_rng.emplace(*cfg.z_prime_seed);

    std::map<int, Disk> witness_cache; // keyed by y_local; the LDT is fixed
    auto witness_for = [&](int y_local) -> const Disk& {
        auto it = witness_cache.find(y_local);
        if (it == witness_cache.end())
            it = witness_cache.emplace(y_local, candidate_empty_disk(state, y_local, cfg)).first;
        return it->second;
    };

    for (const PruneUnit& unit : *order) {
        if (rejected[unit.msg_index]) continue;
        const ReceivedMessage& rm = received[unit.msg_index];
        const Point c = rm.msg.centers[unit.center_index];

        TraceHasher out;
        Point x_pt;
        if (variant == Variant::Pldg) {
            x_pt = *rm.msg.sender_location;
        } else {
            // Nearest neighborhood point to the center. Ties are the
            // normal case here: the carrier's two boundary points are
            // equidistant from it, and either pick defines the same
            // disk, so break ties by location. A second point whose
            // distance is ambiguously close to the chosen radius is
            // caught by the boundary dead-band below.
            double best = std::numeric_limits<double>::infinity();
            int best_i = -1;
            for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
                if (i == state.nbr.self_local) continue;
                double d = distance(pts[i], c);
                if (d < best || (d == best && best_i >= 0 && lex_less(pts[i], pts[best_i]))) {
                    best = d;
                    best_i = i;
                }
            }
            if (best_i < 0) continue;
            x_pt = pts[best_i];
        }

        double radius = distance(c, x_pt); // positive: malformed messages were dropped
        out.add(x_pt).add(radius);

        // The carrier boundary must hold exactly two neighborhood
        // points. Points in the dead band just outside the boundary
        // tolerance make the count unreliable; reject the instance.
        std::vector<int> on_boundary;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            double gap = std::abs(distance(pts[i], c) - radius);
            if (gap <= kEps) {
                on_boundary.push_back(i);
            } else if (gap <= 10.0 * kEps) {
                throw DegenerateInstanceError("prune_phase: point near carrier boundary");
            }
        }
        out.add(static_cast<std::uint64_t>(on_boundary.size()));
        if (on_boundary.size() != 2) {
            state.trace.push_back({"center", TraceHasher().add(c).value(), out.value()});
            continue;
        }

        Point p_pt;
        {
            Point q0 = pts[on_boundary[0]], q1 = pts[on_boundary[1]];
            bool q0_is_x = distance(q0, x_pt) <= kEps;
            bool q1_is_x = distance(q1, x_pt) <= kEps;
            if (q0_is_x == q1_is_x) {
                // The boundary pair does not identify the carrier point;
                // nothing safe to do with this center.
                state.trace.push_back({"center", TraceHasher().add(c).value(), out.value()});
                continue;
            }
            p_pt = q0_is_x ? q1 : q0;
        }
        out.add(p_pt);

        CircularArc arc = arc_outside_disk(Disk{c, radius}, Disk{v, 1.0});
        out.add(static_cast<std::uint64_t>(arc.kind()))
            .add(arc.start_angle())
            .add(arc.extent());

        // The removal test is symmetric in the boundary pair, and the
        // two variants may assign the carrier role to either point of
        // the pair. Order the pair by location before picking z' so
        // both variants evaluate the identical test.
        Point za = x_pt, zb = p_pt;
        if (lex_less(zb, za)) std::swap(za, zb);

        std::optional<Point> z;
        if (!arc.is_empty()) {
            if (z_rng) {
                std::uniform_real_distribution<double> uni(0.0, 1.0);
                z = choose_z_prime_random(arc, za, zb, uni(*z_rng));
            } else {
                z = choose_z_prime(arc, za, zb);
            }
        }
        if (!z) {
            // Empty arc or empty feasible set: no removal can be
            // justified by this center.
            state.trace.push_back({"center", TraceHasher().add(c).value(), out.value()});
            continue;
        }
        out.add(*z);

        std::vector<int> snapshot(state.edge_set.begin(), state.edge_set.end());
        for (int y_local : snapshot) {
            if (!state.edge_set.count(y_local)) continue;
            Point y_pt = pts[y_local];
            const Disk& witness = witness_for(y_local);
            if (arc_in_disk_interior(arc, witness)
                && (segments_cross(v, y_pt, x_pt, *z) || segments_cross(v, y_pt, p_pt, *z))) {
                state.edge_set.erase(y_local);
                certificates.push_back({state.id, state.nbr.ids[y_local], v, y_pt, c,
                                        x_pt, p_pt, *z, witness});
                out.add("remove").add(y_pt);
            }
        }
        state.trace.push_back({"center", TraceHasher().add(c).value(), out.value()});
    }

    TraceHasher fh;
    std::vector<Point> finals;
    for (int y : state.edge_set) finals.push_back(pts[y]);
    std::sort(finals.begin(), finals.end(), lex_less);
    for (Point p : finals) fh.add(p);
    state.trace.push_back({"final_edges", 0, fh.value()});
}

} // namespace pldg
