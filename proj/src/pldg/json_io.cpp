#include "pldg/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pldg {

json to_json(const PointSet& ps) {
    json points = json::array();
    for (const Point& p : ps.points) points.push_back({p.x, p.y});
    return json{{"seed", ps.seed},
                {"generator", ps.generator},
                {"region_side", ps.region_side},
                {"clearance", ps.clearance},
                {"points", std::move(points)}};
}

PointSet point_set_from_json(const json& j) {
    PointSet ps;
    ps.seed = j.at("seed").get<std::uint64_t>();
    ps.generator = j.value("generator", "manual");
    ps.region_side = j.value("region_side", 0.0);
    ps.clearance = j.value("clearance", 10.0);
    for (const auto& entry : j.at("points"))
        ps.points.push_back({entry.at(0).get<double>(), entry.at(1).get<double>()});
    return ps;
}

json to_json(const ExperimentConfig& cfg) {
    const char* variant = cfg.variant == WhichVariant::Pldg        ? "pldg"
                          : cfg.variant == WhichVariant::PldgPrime ? "pldg_prime"
                                                                   : "both";
    return json{{"seed", cfg.seed},
                {"n", cfg.n},
                {"region_side", cfg.region_side},
                {"generator", cfg.generator == PointGenerator::Uniform ? "uniform" : "clustered"},
                {"variant", variant},
                {"trials", cfg.trials},
                {"clearance", cfg.clearance}};
}

namespace {

json edge_list_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

} // namespace

json to_json(const verify::VerificationVerdict& v) {
    json j{{"plane", v.plane},
           {"consistent", v.consistent},
           {"supergraph_of_udel", v.supergraph_of_udel},
           {"messages_ok", v.messages_ok},
           {"stretch", v.stretch},
           {"max_messages", v.max_messages},
           {"round_count", v.round_count},
           {"pass", v.pass()}};
    if (v.crossing)
        j["first_crossing"] = {{v.crossing->first.first, v.crossing->first.second},
                               {v.crossing->second.first, v.crossing->second.second}};
    if (v.asymmetric_edge)
        j["first_asymmetric_edge"] = {v.asymmetric_edge->first, v.asymmetric_edge->second};
    if (v.missing_udel_edge)
        j["first_missing_udel_edge"] = {v.missing_udel_edge->first, v.missing_udel_edge->second};
    if (v.worst_stretch_edge)
        j["worst_stretch_edge"] = {v.worst_stretch_edge->first, v.worst_stretch_edge->second};
    return j;
}

json to_json(const RemovalCertificate& c) {
    return json{{"node", c.node},
                {"neighbor", c.neighbor},
                {"node_pt", {c.node_pt.x, c.node_pt.y}},
                {"neighbor_pt", {c.neighbor_pt.x, c.neighbor_pt.y}},
                {"center", {c.center.x, c.center.y}},
                {"boundary_x", {c.boundary_x.x, c.boundary_x.y}},
                {"boundary_p", {c.boundary_p.x, c.boundary_p.y}},
                {"z_prime", {c.z_prime.x, c.z_prime.y}},
                {"witness_center", {c.witness.center.x, c.witness.center.y}},
                {"witness_radius", c.witness.radius}};
}

json report_to_json(const PointSet& ps, const RunReport& report) {
    json edge_sets = json::array();
    for (const auto& set : report.edge_sets) edge_sets.push_back(set);
    json certs = json::array();
    for (const auto& c : report.certificates) certs.push_back(to_json(c));
    auto stats = count_messages(report);
    json histogram = json::object();
    for (auto [count, nodes] : stats.histogram)
        histogram[std::to_string(count)] = nodes;
    return json{{"variant", variant_name(report.variant)},
                {"round_count", report.round_count},
                {"udg_connected", report.udg_connected},
                {"message_counts", report.message_counts},
                {"max_messages", stats.max},
                {"message_histogram", std::move(histogram)},
                {"edges", edge_list_json(report_graph(ps, report))},
                {"edge_sets", std::move(edge_sets)},
                {"certificates", std::move(certs)}};
}

bool TrialOutcome::pass() const {
    if (verdict_pldg && !verdict_pldg->pass()) return false;
    if (verdict_pldg_prime && !verdict_pldg_prime->pass()) return false;
    if (graphs_equal && !*graphs_equal) return false;
    return verdict_pldg || verdict_pldg_prime;
}

json trial_record(const TrialOutcome& outcome) {
    json j{{"config", to_json(outcome.config)},
           {"points", to_json(outcome.points)},
           {"udg_edges", edge_list_json(build_udg(outcome.points))},
           {"pass", outcome.pass()}};
    if (outcome.pldg) {
        j["pldg"] = report_to_json(outcome.points, *outcome.pldg);
        j["pldg_edges"] = edge_list_json(report_graph(outcome.points, *outcome.pldg));
    }
    if (outcome.pldg_prime) {
        j["pldg_prime"] = report_to_json(outcome.points, *outcome.pldg_prime);
        if (!outcome.pldg)
            j["pldg_edges"] = edge_list_json(report_graph(outcome.points, *outcome.pldg_prime));
    }
    if (outcome.verdict_pldg) j["verdict_pldg"] = to_json(*outcome.verdict_pldg);
    if (outcome.verdict_pldg_prime)
        j["verdict_pldg_prime"] = to_json(*outcome.verdict_pldg_prime);
    if (outcome.graphs_equal) j["graphs_equal"] = *outcome.graphs_equal;

    // Flat views of the reported variant (the untagged one when both ran).
    const auto& verdict = outcome.verdict_pldg_prime ? outcome.verdict_pldg_prime
                                                     : outcome.verdict_pldg;
    if (verdict) j["verdict"] = to_json(*verdict);
    const char* key = outcome.pldg_prime ? "pldg_prime" : "pldg";
    if (j.contains(key)) {
        j["message_histogram"] = j[key]["message_histogram"];
        j["certificates"] = j[key]["certificates"];
    }
    return j;
}

std::string csv_header() {
    return "trial,seed,n,region_side,generator,max_messages_pldg,max_messages_pldg_prime,"
           "stretch,plane,consistent,supergraph_of_udel,messages_ok,graphs_equal,pass";
}

namespace {

std::string bool_field(const std::optional<bool>& b) {
    if (!b) return "";
    return *b ? "true" : "false";
}

} // namespace

std::string csv_row(int trial, const TrialOutcome& outcome) {
    const auto& best = outcome.verdict_pldg_prime ? outcome.verdict_pldg_prime
                                                  : outcome.verdict_pldg;
    std::ostringstream row;
    row << trial << ',' << outcome.points.seed << ',' << outcome.config.n << ','
        << outcome.config.region_side << ',' << outcome.points.generator << ',';
    if (outcome.verdict_pldg) row << outcome.verdict_pldg->max_messages;
    row << ',';
    if (outcome.verdict_pldg_prime) row << outcome.verdict_pldg_prime->max_messages;
    row << ',';
    if (best) {
        row << best->stretch << ',' << (best->plane ? "true" : "false") << ','
            << (best->consistent ? "true" : "false") << ','
            << (best->supergraph_of_udel ? "true" : "false") << ','
            << (best->messages_ok ? "true" : "false");
    } else {
        row << ",,,,";
    }
    row << ',' << bool_field(outcome.graphs_equal) << ','
        << (outcome.pass() ? "true" : "false");
    return row.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace pldg
