#include "pldg/experiment.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "pldg/svg.hpp"

namespace pldg {
namespace {

constexpr int kDegenerateRetries = 25;

} // namespace

TrialOutcome run_and_verify(const ExperimentConfig& config, const PointSet& ps,
                            int threads) {
    TrialOutcome outcome;
    outcome.config = config;
    outcome.points = ps;

    RunOptions options;
    options.threads = threads;

    if (config.variant != WhichVariant::PldgPrime) {
        outcome.pldg = run(ps, Variant::Pldg, options);
        outcome.verdict_pldg = verify::check_run(ps, *outcome.pldg);
    }
    if (config.variant != WhichVariant::Pldg) {
        outcome.pldg_prime = run(ps, Variant::PldgPrime, options);
        outcome.verdict_pldg_prime = verify::check_run(ps, *outcome.pldg_prime);
    }
    if (outcome.pldg && outcome.pldg_prime) {
        outcome.graphs_equal = verify::graphs_equal(report_graph(ps, *outcome.pldg),
                                                    report_graph(ps, *outcome.pldg_prime))
                                   .equal;
    }
    return outcome;
}

TrialOutcome run_trial(const ExperimentConfig& config, int trial, int threads) {
    for (int attempt = 0;; ++attempt) {
        ExperimentConfig instance_cfg = config;
        instance_cfg.seed = derive_seed(config.seed, trial, attempt);
        PointSet ps = generate(instance_cfg);
        try {
            return run_and_verify(config, ps, threads);
        } catch (const DegenerateInstanceError&) {
            if (attempt >= kDegenerateRetries)
                throw GenerationError("run_trial: degenerate-instance retries exhausted");
        }
    }
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& outdir,
                                bool render_svg_files, int jobs,
                                const std::function<void(int, const TrialOutcome&)>& on_trial) {
    if (auto reason = config.validate())
        throw GenerationError("run_experiment: invalid config: " + *reason);
    std::filesystem::create_directories(outdir);

    std::vector<std::string> csv_rows(config.trials);
    std::atomic<int> failed{0};
    std::atomic<int> next{0};
    std::mutex callback_mutex;

    auto worker = [&] {
        for (;;) {
            int trial = next.fetch_add(1);
            if (trial >= config.trials) return;
            TrialOutcome outcome = run_trial(config, trial);
            if (!outcome.pass()) failed.fetch_add(1);
            csv_rows[trial] = csv_row(trial, outcome);

            std::ostringstream name;
            name << outdir << "/trial_" << trial << ".json";
            write_file_atomic(name.str(), trial_record(outcome).dump(2) + "\n");

            if (render_svg_files) {
                const RunReport& report = outcome.pldg_prime ? *outcome.pldg_prime
                                                             : *outcome.pldg;
                std::set<std::pair<int, int>> removed;
                for (const auto& cert : report.certificates) {
                    int u = std::min(cert.node, cert.neighbor);
                    int v = std::max(cert.node, cert.neighbor);
                    removed.insert({u, v});
                }
                std::ostringstream svg_name;
                svg_name << outdir << "/trial_" << trial << ".svg";
                write_file_atomic(
                    svg_name.str(),
                    render_svg(outcome.points, report_graph(outcome.points, report).edges(),
                               {removed.begin(), removed.end()}));
            }
            if (on_trial) {
                std::lock_guard<std::mutex> lock(callback_mutex);
                on_trial(trial, outcome);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << csv_header() << '\n';
    for (const auto& row : csv_rows) csv << row << '\n';
    write_file_atomic(outdir + "/summary.csv", csv.str());

    return {config.trials, failed.load()};
}

} // namespace pldg
