#pragma once

#include <functional>
#include <string>

#include "pldg/json_io.hpp"

namespace pldg {

// Generates one instance for the given trial (regenerating on
// degenerate-instance rejection, bounded) and runs the configured
// variants with verification.
TrialOutcome run_trial(const ExperimentConfig& config, int trial, int threads = 1);

// Runs and verifies the configured variants on an existing instance.
// Throws DegenerateInstanceError if the instance is too close to a
// decision threshold.
TrialOutcome run_and_verify(const ExperimentConfig& config, const PointSet& ps,
                            int threads = 1);

struct ExperimentResult {
    int trials_run = 0;
    int trials_failed = 0;
    bool ok() const { return trials_failed == 0; }
};

// Full experiment: per trial generate, run, verify, and write one JSON
// record (plus a CSV summary row and optionally an SVG render) into the
// output directory. Trials are independent and may run in parallel;
// files are written atomically.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& outdir,
                                bool render_svg_files = false, int jobs = 1,
                                const std::function<void(int, const TrialOutcome&)>&
                                    on_trial = nullptr);

} // namespace pldg
