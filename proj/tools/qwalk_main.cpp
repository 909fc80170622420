// qwalk: two-walker and single-walker quantum walk experiments.
//
//   qwalk run CONFIG.json
//   qwalk preset --initial sep1 --mode hpp --steps 18 --out DIR
//   qwalk compare --initial sep1 --steps 18 --out DIR

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cli_common.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/simd/kernels.hpp"

namespace {

void print_summary(const qwalk::ExperimentResult& r, const std::filesystem::path& dir) {
    std::cout << "wrote " << r.files.size() + 1 << " files to " << dir.string() << '\n';
    if (!r.sigma.empty()) {
        std::cout << "sigma(t=" << r.sigma.back().t << ") = " << qwalk::format_double(r.sigma.back().value) << '\n';
    }
    if (!r.entropy.empty()) {
        std::cout << "entropy(t=" << r.entropy.back().t << ") = " << qwalk::format_double(r.entropy.back().value)
                  << " bits\n";
    }
    if (r.fit) {
        std::cout << "alpha = " << qwalk::format_double(r.fit->alpha) << ", r2 = " << qwalk::format_double(r.fit->r2)
                  << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    qwalk::configure_threads_from_env();

    CLI::App app{"Coined quantum walks of interacting walkers on the square lattice"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a JSON config");
    run_cmd->add_option("config", config_path, "Path to the config document")->required();

    std::string initial = "sep1";
    std::string mode = "hpp";
    int steps = 18;
    int observe_every = 1;
    std::string out_dir = "out";
    std::size_t budget = qwalk::kDefaultAmplitudeBudget;

    auto* preset_cmd = app.add_subcommand("preset", "Run a named two-walker initial state");
    preset_cmd->add_option("--initial", initial, "sep1 | sep2 | grov | ent")->capture_default_str();
    preset_cmd->add_option("--mode", mode, "none | hpp | phase")->capture_default_str();
    preset_cmd->add_option("--steps", steps, "Number of steps")->capture_default_str();
    preset_cmd->add_option("--observe-every", observe_every, "Observation stride")->capture_default_str();
    preset_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    preset_cmd->add_option("--budget", budget, "Maximum stored amplitudes")->capture_default_str();

    auto* compare_cmd = app.add_subcommand("compare", "Run hpp and phase interactions side by side");
    compare_cmd->add_option("--initial", initial, "sep1 | sep2 | grov | ent")->capture_default_str();
    compare_cmd->add_option("--steps", steps, "Number of steps")->capture_default_str();
    compare_cmd->add_option("--observe-every", observe_every, "Observation stride")->capture_default_str();
    compare_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    compare_cmd->add_option("--budget", budget, "Maximum stored amplitudes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qwalk::cli::kExitOk : qwalk::cli::kExitConfig;
    }

    auto preset_config = [&] {
        qwalk::ExperimentConfig cfg;
        cfg.kind = qwalk::ExperimentKind::two_walker;
        try {
            cfg.preset = qwalk::parse_initial(initial);
        } catch (const std::invalid_argument& e) {
            throw qwalk::ConfigError("initial", e.what());
        }
        try {
            cfg.mode = qwalk::parse_mode(mode);
        } catch (const std::invalid_argument& e) {
            throw qwalk::ConfigError("mode", e.what());
        }
        cfg.steps = steps;
        cfg.observe_every = observe_every;
        cfg.output_dir = out_dir;
        cfg.budget = budget;
        if (steps < 1) {
            throw qwalk::ConfigError("steps", "must be at least 1");
        }
        cfg.fit_window = qwalk::default_fit_window(steps);
        qwalk::validate_config(cfg);
        return cfg;
    };

    return qwalk::cli::guarded("qwalk", [&] {
        if (*run_cmd) {
            const qwalk::ExperimentConfig cfg = qwalk::load_config(config_path);
            print_summary(qwalk::run_experiment(cfg), cfg.output_dir);
        } else if (*preset_cmd) {
            const qwalk::ExperimentConfig cfg = preset_config();
            print_summary(qwalk::run_experiment(cfg), cfg.output_dir);
        } else if (*compare_cmd) {
            const qwalk::ExperimentConfig cfg = preset_config();
            const auto result = qwalk::run_comparison(cfg);
            std::cout << "[hpp]\n";
            print_summary(result.hpp, cfg.output_dir / "hpp");
            std::cout << "[phase]\n";
            print_summary(result.phase, cfg.output_dir / "phase");
        }
    });
}
