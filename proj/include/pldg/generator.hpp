#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pldg/udg.hpp"

namespace pldg {

enum class PointGenerator { Uniform, Clustered };
enum class WhichVariant { Pldg, PldgPrime, Both };

struct ExperimentConfig {
    std::uint64_t seed = 0;
    int n = 50;
    double region_side = 3.0; // in units of the radio range
    PointGenerator generator = PointGenerator::Uniform;
    WhichVariant variant = WhichVariant::Both;
    int trials = 1;
    double clearance = 10.0; // epsilon multiplier for degeneracy rejection
    int max_retries = 400;

    std::optional<std::string> validate() const;
};

// Degeneracy screen for a candidate instance: pairwise-distinct points,
// unit-threshold clearance, orientation clearance, and (for small sets,
// where it is affordable) clearance of every point from every other
// triple's circumcircle. Returns a rejection reason or nothing.
std::optional<std::string> instance_clearance_report(const std::vector<Point>& pts,
                                                     double clearance);

// Samples point sets until one passes the clearance screen with a
// connected unit-disk graph; throws GenerationError when the retry
// budget runs out. Deterministic in the seed.
PointSet generate(const ExperimentConfig& config);

// Seed for trial t (and regeneration attempt a) of an experiment,
// derived so trials are independent but reproducible.
std::uint64_t derive_seed(std::uint64_t base, int trial, int attempt = 0);

} // namespace pldg
