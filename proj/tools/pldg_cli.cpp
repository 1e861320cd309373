// Command-line front end: instance generation, experiment runs with
// verification, single-instance verification, and SVG rendering.

#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "pldg/experiment.hpp"
#include "pldg/svg.hpp"

namespace {

using namespace pldg;

void add_config_flags(CLI::App* cmd, ExperimentConfig& cfg, std::string& generator,
                      std::string& variant) {
    cmd->add_option("--n", cfg.n, "number of points")->check(CLI::Range(2, 100000));
    cmd->add_option("--side", cfg.region_side, "square region side, in radio ranges")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--generator", generator, "point generator: uniform|clustered")
        ->check(CLI::IsMember({"uniform", "clustered"}));
    cmd->add_option("--variant", variant, "algorithm variant: pldg|pldg-prime|both")
        ->check(CLI::IsMember({"pldg", "pldg-prime", "both"}));
    cmd->add_option("--clearance", cfg.clearance,
                    "degeneracy rejection threshold, as a multiple of 1e-9")
        ->check(CLI::PositiveNumber);
}

void apply_enums(ExperimentConfig& cfg, const std::string& generator,
                 const std::string& variant) {
    cfg.generator = generator == "clustered" ? PointGenerator::Clustered
                                             : PointGenerator::Uniform;
    cfg.variant = variant == "pldg"         ? WhichVariant::Pldg
                  : variant == "pldg-prime" ? WhichVariant::PldgPrime
                                            : WhichVariant::Both;
}

int cmd_generate(const ExperimentConfig& cfg, const std::string& out) {
    PointSet ps = generate(cfg);
    std::string payload = to_json(ps).dump(2) + "\n";
    if (out.empty()) {
        std::cout << payload;
    } else {
        write_file_atomic(out, payload);
        std::cout << "wrote " << out << " (" << ps.size() << " points)\n";
    }
    return 0;
}

int cmd_run(const ExperimentConfig& cfg, const std::string& outdir, bool svg, int jobs) {
    ExperimentResult result = run_experiment(
        cfg, outdir, svg, jobs, [](int trial, const TrialOutcome& outcome) {
            std::cout << "trial " << trial << ": "
                      << (outcome.pass() ? "pass" : "FAIL") << "\n";
        });
    std::cout << result.trials_run << " trial(s), " << result.trials_failed
              << " failed; records in " << outdir << "\n";
    return result.ok() ? 0 : 1;
}

int cmd_verify(const ExperimentConfig& cfg, const std::string& input, int jobs) {
    PointSet ps = point_set_from_json(json::parse(read_file(input)));
    TrialOutcome outcome = run_and_verify(cfg, ps, jobs);
    json j;
    if (outcome.verdict_pldg) j["verdict_pldg"] = to_json(*outcome.verdict_pldg);
    if (outcome.verdict_pldg_prime)
        j["verdict_pldg_prime"] = to_json(*outcome.verdict_pldg_prime);
    if (outcome.graphs_equal) j["graphs_equal"] = *outcome.graphs_equal;
    j["pass"] = outcome.pass();
    std::cout << j.dump(2) << "\n";
    return outcome.pass() ? 0 : 1;
}

int cmd_render(const std::string& input, const std::string& out) {
    json record = json::parse(read_file(input));
    PointSet ps = point_set_from_json(record.at("points"));

    std::vector<std::pair<int, int>> kept;
    for (const auto& e : record.at("pldg_edges"))
        kept.push_back({e.at(0).get<int>(), e.at(1).get<int>()});

    std::set<std::pair<int, int>> removed;
    if (record.contains("certificates")) {
        for (const auto& cert : record.at("certificates")) {
            int u = cert.at("node").get<int>();
            int v = cert.at("neighbor").get<int>();
            removed.insert({std::min(u, v), std::max(u, v)});
        }
    }
    write_file_atomic(out, render_svg(ps, kept, {removed.begin(), removed.end()}));
    std::cout << "wrote " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"localized Delaunay plane spanner toolkit"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string generator = "uniform";
    std::string variant = "both";
    std::string out_file;
    std::string outdir = "out";
    std::string input;
    bool svg = false;
    int jobs = 1;

    CLI::App* gen = app.add_subcommand("generate", "generate one instance as JSON");
    gen->add_option("--seed", cfg.seed, "generator seed")->required();
    add_config_flags(gen, cfg, generator, variant);
    gen->add_option("--out", out_file, "output file (stdout if omitted)");

    CLI::App* runcmd = app.add_subcommand("run", "run an experiment with verification");
    runcmd->add_option("--seed", cfg.seed, "experiment seed")->required();
    add_config_flags(runcmd, cfg, generator, variant);
    runcmd->add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
    runcmd->add_option("--outdir", outdir, "directory for trial records");
    runcmd->add_flag("--svg", svg, "also render an SVG per trial");
    runcmd->add_option("--jobs", jobs, "parallel trials")->check(CLI::PositiveNumber);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a stored instance");
    verify_cmd->add_option("--input", input, "point set JSON file")->required();
    add_config_flags(verify_cmd, cfg, generator, variant);
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* render_cmd = app.add_subcommand("render", "render a trial record to SVG");
    render_cmd->add_option("--input", input, "trial record JSON file")->required();
    render_cmd->add_option("--out", out_file, "output SVG file")->required();

    CLI11_PARSE(app, argc, argv);
    apply_enums(cfg, generator, variant);

    try {
        if (gen->parsed()) return cmd_generate(cfg, out_file);
        if (runcmd->parsed()) return cmd_run(cfg, outdir, svg, jobs);
        if (verify_cmd->parsed()) return cmd_verify(cfg, input, jobs);
        if (render_cmd->parsed()) return cmd_render(input, out_file);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
