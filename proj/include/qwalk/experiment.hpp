#pragma once

// Deterministic execution of configured experiments and their file outputs.
//
// Output directory layout (two-walker):
//   marginal_tNNN.csv   first-walker distribution at each observed step
//   sigma.csv           t,sigma
//   entropy.csv         t,entropy (bits)
//   fit.json            linear fit of sigma over the fit window
//   manifest.txt        key=value record of the run
// Single-walker runs omit entropy.csv. Classical runs write
// snapshot_tNNN.pgm / snapshot_tNNN.csv, counts.csv and manifest.txt.

#include <filesystem>
#include <optional>
#include <vector>

#include "qwalk/classical_hpp.hpp"
#include "qwalk/config.hpp"
#include "qwalk/csv.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

struct ExperimentResult {
    SigmaSeries sigma;
    EntropySeries entropy;
    std::optional<FitResult> fit;
    std::vector<std::filesystem::path> files;
    Manifest manifest;

    long long particles_before = 0;
    long long particles_after = 0;
    Momentum momentum_before;
    Momentum momentum_after;
};

/// Runs the experiment and writes its files under config.output_dir
/// (created if missing). Engine errors (BudgetExceeded, StateCorruption,
/// WindowOverflow) and I/O errors propagate.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct ComparisonResult {
    ExperimentResult hpp;
    ExperimentResult phase;
};

/// Runs a two-walker config under both interactions into
/// output_dir/hpp and output_dir/phase, and writes output_dir/compare.csv
/// (t,sigma_hpp,sigma_phase,entropy_hpp,entropy_phase).
ComparisonResult run_comparison(const ExperimentConfig& config);

}  // namespace qwalk
