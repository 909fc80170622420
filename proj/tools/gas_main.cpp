// gas: classical HPP lattice gas on a torus.
//
//   gas run --size 64 --seed 42 --steps 1000 --out DIR [--density 0.2]

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cli_common.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/parallel.hpp"

int main(int argc, char** argv) {
    qwalk::configure_threads_from_env();

    CLI::App app{"Classical HPP lattice-gas automaton"};
    app.require_subcommand(1);

    int size = 64;
    std::uint64_t seed = 0;
    int steps = 100;
    double density = 0.2;
    int snapshot_every = 0;
    std::string out_dir = "out";

    auto* run_cmd = app.add_subcommand("run", "Evolve a seeded random grid");
    run_cmd->add_option("--size", size, "Torus side length (even)")->capture_default_str();
    run_cmd->add_option("--seed", seed, "PRNG seed (mt19937_64)")->capture_default_str();
    run_cmd->add_option("--steps", steps, "Number of steps")->capture_default_str();
    run_cmd->add_option("--density", density, "Occupation probability per channel")->capture_default_str();
    run_cmd->add_option("--snapshot-every", snapshot_every, "Snapshot stride (default: first and last step only)");
    run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qwalk::cli::kExitOk : qwalk::cli::kExitConfig;
    }

    return qwalk::cli::guarded("gas", [&] {
        qwalk::ExperimentConfig cfg;
        cfg.kind = qwalk::ExperimentKind::classical;
        cfg.preset.reset();
        cfg.size = size;
        cfg.seed = seed;
        cfg.steps = steps;
        cfg.density = density;
        cfg.observe_every = snapshot_every > 0 ? snapshot_every : steps;
        cfg.output_dir = out_dir;
        qwalk::validate_config(cfg);
        const auto result = qwalk::run_experiment(cfg);
        std::cout << "particles " << result.particles_before << " -> " << result.particles_after << ", momentum ("
                  << result.momentum_before.px << "," << result.momentum_before.py << ") -> ("
                  << result.momentum_after.px << "," << result.momentum_after.py << ")\n";
        std::cout << "wrote " << result.files.size() + 1 << " files to " << cfg.output_dir.string() << '\n';
    });
}
