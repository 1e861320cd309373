#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pldg/generator.hpp"
#include "pldg/protocol.hpp"
#include "pldg/sim.hpp"
#include "pldg/verify.hpp"

#include "support.hpp"

using namespace pldg;

namespace {

Neighborhood make_nbr(std::vector<Point> pts, int self) {
    Neighborhood nv;
    nv.pts = std::move(pts);
    nv.self_local = self;
    for (int i = 0; i < static_cast<int>(nv.pts.size()); ++i) nv.ids.push_back(i);
    return nv;
}

int local_index(const Neighborhood& nv, int global) {
    return static_cast<int>(std::lower_bound(nv.ids.begin(), nv.ids.end(), global)
                            - nv.ids.begin());
}

} // namespace

TEST_CASE("broadcast_phase: right-angle apex broadcasts one center") {
    auto [state, msg] = broadcast_phase(0, make_nbr({{0, 0}, {1, 0}, {0, 1}}, 0),
                                        Variant::Pldg);
    REQUIRE(msg.has_value());
    REQUIRE(msg->centers.size() == 1);
    CHECK(msg->centers[0].x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(msg->centers[0].y == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(msg->sender_location.has_value());
    CHECK(*msg->sender_location == Point{0, 0});
    CHECK(msg->point_count() == 2);
    CHECK(state.edge_set.size() == 2);

    auto [state_p, msg_p] = broadcast_phase(0, make_nbr({{0, 0}, {1, 0}, {0, 1}}, 0),
                                            Variant::PldgPrime);
    REQUIRE(msg_p.has_value());
    CHECK_FALSE(msg_p->sender_location.has_value());
    CHECK(msg_p->point_count() == 1);
    CHECK(msg_p->centers == msg->centers);
}

TEST_CASE("broadcast_phase: narrow apex stays silent") {
    // Apex angle at the origin is about 17 degrees.
    auto [state, msg] = broadcast_phase(0, make_nbr({{0, 0}, {1, 0}, {0.96, 0.3}}, 0),
                                        Variant::Pldg);
    CHECK_FALSE(msg.has_value());
    CHECK(state.edge_set.size() == 2); // incident edges are kept regardless
}

TEST_CASE("broadcast_phase: lone node") {
    auto [state, msg] = broadcast_phase(5, make_nbr({{2, 2}}, 0), Variant::PldgPrime);
    CHECK_FALSE(msg.has_value());
    CHECK(state.edge_set.empty());
}

TEST_CASE("candidate_empty_disk: hull edge of a single triangle") {
    auto [state, msg] = broadcast_phase(0, make_nbr({{0, 0}, {1, 0}, {0, 1}}, 0),
                                        Variant::Pldg);
    Disk witness = candidate_empty_disk(state, 1); // edge (0,0)-(1,0)
    CHECK(witness.center.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(witness.center.y == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(witness.radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    // The third point is well outside.
    CHECK(distance(Point{0, 1}, witness.center) > witness.radius + 0.5);
}

TEST_CASE("candidate_empty_disk: two-point neighborhood uses the diametral disk") {
    auto [state, msg] = broadcast_phase(3, make_nbr({{0, 0}, {0.6, 0}}, 0),
                                        Variant::PldgPrime);
    Disk witness = candidate_empty_disk(state, 1);
    CHECK(witness.center.x == doctest::Approx(0.3));
    CHECK(witness.center.y == doctest::Approx(0.0));
    CHECK(witness.radius == doctest::Approx(0.3));
}

TEST_CASE("candidate_empty_disk: witnesses verify against the whole neighborhood") {
    std::mt19937_64 rng(1717);
    int checked = 0;
    while (checked < 60) {
        auto pts = testsupport::random_points(rng, 12, 0.0, 1.2);
        if (instance_clearance_report(pts, 10.0)) continue;
        auto [state, msg] = broadcast_phase(0, make_nbr(pts, 0), Variant::PldgPrime);
        for (int y : state.edge_set) {
            Disk witness = candidate_empty_disk(state, y);
            CHECK(witness.on_boundary(pts[0]));
            CHECK(witness.on_boundary(pts[y]));
            for (int m = 0; m < static_cast<int>(pts.size()); ++m) {
                if (m == 0 || m == y) continue;
                CHECK(distance(pts[m], witness.center) > witness.radius - 1e-9);
            }
        }
        ++checked;
    }
}

TEST_CASE("prune_phase: no messages leaves the edge set unchanged") {
    auto [state, msg] = broadcast_phase(0, make_nbr({{0, 0}, {1, 0}, {0, 1}}, 0),
                                        Variant::Pldg);
    auto before = state.edge_set;
    std::vector<RemovalCertificate> certs;
    prune_phase(state, {}, Variant::Pldg, certs);
    CHECK(state.edge_set == before);
    CHECK(certs.empty());
}

TEST_CASE("prune_phase: mutually close triangle keeps all edges") {
    PointSet ps;
    ps.points = {{0, 0}, {0.9, 0}, {0.3, 0.4}};
    for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
        RunReport report = run(ps, variant);
        Graph g = report_graph(ps, report);
        CHECK(g.edge_count() == 3);
        CHECK(verify::graphs_equal(g, verify::udel_oracle(ps)).equal);
        // At least one node exceeds the angle threshold and broadcasts.
        CHECK(count_messages(report).max >= 1);
    }
}

TEST_CASE("asymmetric local Delaunay edges are pruned") {
    // Randomized search for four-point sets where (v,y) is an edge of
    // v's local triangulation but not of y's; the prune phase must then
    // drop it from E(v).
    std::mt19937_64 rng(90210);
    int found = 0;
    while (found < 25) {
        auto pts = testsupport::random_points(rng, 4, 0.0, 1.5);
        if (instance_clearance_report(pts, 10.0)) continue;
        PointSet ps;
        ps.points = pts;
        Graph udg = build_udg(ps);

        // Local triangulations per node.
        std::vector<NodeState> states;
        for (int v = 0; v < 4; ++v) {
            Neighborhood nv;
            nv.ids.push_back(v);
            for (auto [w, len] : udg.neighbors(v)) nv.ids.push_back(w);
            std::sort(nv.ids.begin(), nv.ids.end());
            for (std::size_t i = 0; i < nv.ids.size(); ++i) {
                nv.pts.push_back(pts[nv.ids[i]]);
                if (nv.ids[i] == v) nv.self_local = static_cast<int>(i);
            }
            states.push_back(broadcast_phase(v, nv, Variant::PldgPrime).first);
        }

        for (int v = 0; v < 4; ++v) {
            for (auto [y, len] : udg.neighbors(v)) {
                bool in_v = states[v].ldt.has_edge(local_index(states[v].nbr, v),
                                                   local_index(states[v].nbr, y));
                bool in_y = states[y].ldt.has_edge(local_index(states[y].nbr, y),
                                                   local_index(states[y].nbr, v));
                if (!in_v || in_y) continue;
                ++found;
                for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
                    RunReport report = run(ps, variant);
                    CHECK_FALSE(report.edge_sets[v].count(y));
                }
            }
        }
    }
}

TEST_CASE("per-node broadcast budget holds on random instances") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 15; ++iter) {
        ExperimentConfig cfg;
        cfg.seed = rng();
        cfg.n = 60;
        cfg.region_side = 3.0;
        PointSet ps = generate(cfg);
        RunReport prime = run(ps, Variant::PldgPrime);
        CHECK(count_messages(prime).max <= 5);
        RunReport classic = run(ps, Variant::Pldg);
        CHECK(count_messages(classic).max <= 6);
        // Broadcasting nodes in the tagged variant pay one extra
        // point location.
        for (int v = 0; v < ps.size(); ++v) {
            if (prime.message_counts[v] > 0)
                CHECK(classic.message_counts[v] == prime.message_counts[v] + 1);
        }
    }
}

TEST_CASE("removal certificates replay the pruning decision") {
    std::mt19937_64 rng(40404);
    int replayed = 0;
    while (replayed < 40) {
        ExperimentConfig cfg;
        cfg.seed = rng();
        cfg.n = 50;
        cfg.region_side = 2.6;
        PointSet ps = generate(cfg);
        for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
            RunReport report = run(ps, variant);
            for (const RemovalCertificate& cert : report.certificates) {
                Disk carrier{cert.center, distance(cert.center, cert.boundary_x)};
                CircularArc arc = arc_outside_disk(carrier, Disk{cert.node_pt, 1.0});
                REQUIRE_FALSE(arc.is_empty());
                CHECK(arc_in_disk_interior(arc, cert.witness));
                CHECK((segments_cross(cert.node_pt, cert.neighbor_pt, cert.boundary_x,
                                      cert.z_prime)
                       || segments_cross(cert.node_pt, cert.neighbor_pt, cert.boundary_p,
                                         cert.z_prime)));
                ++replayed;
            }
        }
    }
}

TEST_CASE("every structural removal case occurs and is classified") {
    // The removed edge (v,y) may coincide with the boundary pair in
    // three ways (y = x, v = p, y = p) besides the fully generic one;
    // a dense randomized batch must exercise all four.
    int generic = 0, y_is_x = 0, v_is_p = 0, y_is_p = 0;
    for (int t = 0; t < 120; ++t) {
        ExperimentConfig cfg;
        cfg.seed = derive_seed(0xcafe, t);
        cfg.n = 60;
        cfg.region_side = 2.6;
        PointSet ps = generate(cfg);
        for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
            for (const auto& c : run(ps, variant).certificates) {
                if (distance(c.neighbor_pt, c.boundary_x) <= 1e-12) ++y_is_x;
                else if (distance(c.node_pt, c.boundary_p) <= 1e-12) ++v_is_p;
                else if (distance(c.neighbor_pt, c.boundary_p) <= 1e-12) ++y_is_p;
                else ++generic;
            }
        }
    }
    CHECK(generic > 0);
    CHECK(y_is_x > 0);
    CHECK(v_is_p > 0);
    CHECK(y_is_p > 0);
}

TEST_CASE("a message with a center on a neighborhood point is rejected whole") {
    for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
        auto [state, msg] = broadcast_phase(0, make_nbr({{0, 0}, {0.8, 0}, {0.4, 0.6}}, 0),
                                            variant);
        auto before = state.edge_set;
        BroadcastMessage bogus;
        if (variant == Variant::Pldg) bogus.sender_location = Point{0.8, 0};
        bogus.centers = {Point{0.8, 0}}; // zero-radius carrier
        std::vector<RemovalCertificate> certs;
        prune_phase(state, {{Point{0.8, 0}, bogus}}, variant, certs);
        CHECK(state.edge_set == before);
        CHECK(certs.empty());
        bool diagnostic = false;
        for (const TraceEntry& entry : state.trace)
            if (entry.op == "message_rejected") diagnostic = true;
        CHECK(diagnostic);
    }
}

TEST_CASE("message processing order does not change the result") {
    std::mt19937_64 rng(60606);
    for (int iter = 0; iter < 10; ++iter) {
        ExperimentConfig cfg;
        cfg.seed = rng();
        cfg.n = 40;
        cfg.region_side = 2.4;
        PointSet ps = generate(cfg);
        for (Variant variant : {Variant::Pldg, Variant::PldgPrime}) {
            RunReport base = run(ps, variant);
            for (std::uint64_t shuffle_seed : {1ull, 2ull, 3ull}) {
                RunOptions options;
                options.message_order_seed = shuffle_seed;
                RunReport shuffled = run(ps, variant, options);
                CHECK(shuffled.edge_sets == base.edge_sets);
            }
        }
    }
}
