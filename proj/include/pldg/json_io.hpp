#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pldg/generator.hpp"
#include "pldg/sim.hpp"
#include "pldg/verify.hpp"

namespace pldg {

using nlohmann::json;

json to_json(const PointSet& ps);
PointSet point_set_from_json(const json& j);

json to_json(const ExperimentConfig& cfg);
json to_json(const verify::VerificationVerdict& verdict);
json to_json(const RemovalCertificate& cert);

// Serialized run outcome; byte-identical for identical seeds and
// configurations.
json report_to_json(const PointSet& ps, const RunReport& report);

// One machine-readable record per trial: the configuration, the
// instance, both graphs, the verdict, the message histogram, and the
// removal certificates.
struct TrialOutcome {
    ExperimentConfig config;
    PointSet points;
    std::optional<RunReport> pldg;
    std::optional<RunReport> pldg_prime;
    std::optional<verify::VerificationVerdict> verdict_pldg;
    std::optional<verify::VerificationVerdict> verdict_pldg_prime;
    std::optional<bool> graphs_equal;

    bool pass() const;
};

json trial_record(const TrialOutcome& outcome);

std::string csv_header();
std::string csv_row(int trial, const TrialOutcome& outcome);

// Write via a temporary file and rename, so readers never observe a
// half-written record.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace pldg
