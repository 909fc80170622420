#include "qwalk/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/simd/kernels.hpp"
#include "qwalk/single_walker.hpp"

#ifndef QWALK_VERSION
#define QWALK_VERSION "unknown"
#endif

namespace qwalk {

namespace {

using Clock = std::chrono::steady_clock;

Manifest manifest_header(const ExperimentConfig& config) {
    Manifest m;
    m.emplace_back("tool", "qwalk");
    m.emplace_back("version", QWALK_VERSION);
    m.emplace_back("simd", std::string(simd::active_kernels().name));
    m.emplace_back("threads", std::to_string(thread_count()));
    for (auto& kv : describe(config)) {
        m.push_back(std::move(kv));
    }
    return m;
}

void write_text_file(const std::filesystem::path& path, const auto& writer) {
    std::ofstream out = open_output(path);
    writer(out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

void write_series(ExperimentResult& result, const std::filesystem::path& dir, const char* name,
                  const std::vector<SeriesPoint>& series, const char* column) {
    const auto path = dir / name;
    write_text_file(path, [&](std::ostream& out) { write_series_csv(series, column, out); });
    result.files.push_back(path);
}

void write_fit(ExperimentResult& result, const ExperimentConfig& config, const std::filesystem::path& dir) {
    const auto [t_min, t_max] = config.fit_window;
    nlohmann::ordered_json doc;
    doc["t_min"] = t_min;
    doc["t_max"] = t_max;
    try {
        result.fit = fit_slope(result.sigma, t_min, t_max);
        doc["alpha"] = result.fit->alpha;
        doc["intercept"] = result.fit->intercept;
        doc["r2"] = result.fit->r2;
        doc["points"] = result.fit->points;
    } catch (const std::invalid_argument& e) {
        doc["alpha"] = nullptr;
        doc["r2"] = nullptr;
        doc["note"] = e.what();
    }
    const auto path = dir / "fit.json";
    write_text_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
    result.files.push_back(path);
}

void finish_manifest(ExperimentResult& result, const std::filesystem::path& dir, Clock::time_point start) {
    std::string names;
    for (const auto& f : result.files) {
        if (!names.empty()) {
            names += ',';
        }
        names += f.filename().string();
    }
    result.manifest.emplace_back("files", names);
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", std::chrono::duration<double>(Clock::now() - start).count());
    result.manifest.emplace_back("wall_time_seconds", wall);
    const auto path = dir / "manifest.txt";
    write_text_file(path, [&](std::ostream& out) { write_manifest(result.manifest, out); });
}

ExperimentResult run_two_walker(const ExperimentConfig& config) {
    const auto start = Clock::now();
    const auto& dir = config.output_dir;
    ExperimentResult result;
    result.manifest = manifest_header(config);

    TwoWalkerState initial =
        config.preset ? make_initial(*config.preset) : TwoWalkerState::from_terms(config.literal_terms);
    if (initial.stored_amplitudes() > config.budget) {
        throw BudgetExceeded(initial.stored_amplitudes(), config.budget);
    }

    auto observe = [&](const TwoWalkerState& state) {
        const int t = state.step_count();
        if (t % config.observe_every != 0) {
            return;
        }
        const ProbabilityGrid grid = marginal_first(state);
        const auto path = dir / step_file_name("marginal_t", t, ".csv");
        emit_heatmap_csv(grid, path);
        result.files.push_back(path);
        result.sigma.push_back({t, std_dev(grid)});
        result.entropy.push_back({t, entanglement_entropy(state)});
    };

    observe(initial);
    const TwoWalkerState final_state = run(std::move(initial), config.mode, config.steps, observe, {config.budget});

    write_series(result, dir, "sigma.csv", result.sigma, "sigma");
    write_series(result, dir, "entropy.csv", result.entropy, "entropy");
    write_fit(result, config, dir);
    result.manifest.emplace_back("final_norm", format_double(std::sqrt(final_state.norm_squared())));
    result.manifest.emplace_back("stored_amplitudes", std::to_string(final_state.stored_amplitudes()));
    finish_manifest(result, dir, start);
    return result;
}

ExperimentResult run_single(const ExperimentConfig& config) {
    const auto start = Clock::now();
    const auto& dir = config.output_dir;
    ExperimentResult result;
    result.manifest = manifest_header(config);

    SingleWalkerState state = make_max_spread_initial(config.steps);
    if (!config.single_terms.empty()) {
        int reach = 0;
        for (const auto& t : config.single_terms) {
            reach = std::max({reach, std::abs(t.node.x), std::abs(t.node.y)});
        }
        state = SingleWalkerState::window(config.steps + 1 + reach);
        for (const auto& t : config.single_terms) {
            state.set_amplitude(t.coin, t.node, state.amplitude(t.coin, t.node) + t.amplitude);
        }
    }
    const std::size_t stored = 4 * static_cast<std::size_t>(state.extent()) * state.extent();
    if (stored > config.budget) {
        throw BudgetExceeded(stored, config.budget);
    }

    auto observe = [&](const SingleWalkerState& s) {
        if (s.step_count() % config.observe_every != 0) {
            return;
        }
        const ProbabilityGrid grid = single_probability(s);
        const auto path = dir / step_file_name("marginal_t", s.step_count(), ".csv");
        emit_heatmap_csv(grid, path);
        result.files.push_back(path);
        result.sigma.push_back({s.step_count(), std_dev(grid)});
    };
    observe(state);
    for (int t = 0; t < config.steps; ++t) {
        state = evolve_single(state);
        observe(state);
    }

    write_series(result, dir, "sigma.csv", result.sigma, "sigma");
    write_fit(result, config, dir);
    result.manifest.emplace_back("final_norm", format_double(std::sqrt(state.norm_squared())));
    finish_manifest(result, dir, start);
    return result;
}

std::string momentum_text(const Momentum& m) { return std::to_string(m.px) + "," + std::to_string(m.py); }

ExperimentResult run_classical(const ExperimentConfig& config) {
    const auto start = Clock::now();
    const auto& dir = config.output_dir;
    ExperimentResult result;
    result.manifest = manifest_header(config);
    result.manifest.emplace_back("prng", "mt19937_64");

    GasGrid grid = GasGrid::random(config.size, config.size, config.density, config.seed);
    result.particles_before = particle_count(grid);
    result.momentum_before = momentum(grid);

    std::ostringstream counts;
    counts << "t,particles,px,py\n";
    auto observe = [&](const GasGrid& g, int t) {
        const Momentum m = momentum(g);
        counts << t << ',' << particle_count(g) << ',' << m.px << ',' << m.py << '\n';
        if (t % config.observe_every != 0) {
            return;
        }
        const auto pgm = dir / step_file_name("snapshot_t", t, ".pgm");
        write_text_file(pgm, [&](std::ostream& out) { write_pgm(g, out); });
        const auto csv = dir / step_file_name("snapshot_t", t, ".csv");
        write_text_file(csv, [&](std::ostream& out) { write_gas_csv(g, out); });
        result.files.push_back(pgm);
        result.files.push_back(csv);
    };
    observe(grid, 0);
    for (int t = 1; t <= config.steps; ++t) {
        grid = step_classical(grid);
        observe(grid, t);
    }
    result.particles_after = particle_count(grid);
    result.momentum_after = momentum(grid);

    const auto counts_path = dir / "counts.csv";
    write_text_file(counts_path, [&](std::ostream& out) { out << counts.str(); });
    result.files.push_back(counts_path);

    result.manifest.emplace_back("particles_before", std::to_string(result.particles_before));
    result.manifest.emplace_back("particles_after", std::to_string(result.particles_after));
    result.manifest.emplace_back("momentum_before", momentum_text(result.momentum_before));
    result.manifest.emplace_back("momentum_after", momentum_text(result.momentum_after));
    const bool conserved =
        result.particles_before == result.particles_after && result.momentum_before == result.momentum_after;
    result.manifest.emplace_back("conserved", conserved ? "yes" : "no");
    finish_manifest(result, dir, start);
    return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::filesystem::create_directories(config.output_dir);
    switch (config.kind) {
        case ExperimentKind::two_walker:
            return run_two_walker(config);
        case ExperimentKind::single:
            return run_single(config);
        case ExperimentKind::classical:
            return run_classical(config);
    }
    throw std::logic_error("unhandled experiment kind");
}

ComparisonResult run_comparison(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::two_walker) {
        throw ConfigError("kind", "comparison needs a two-walker experiment");
    }
    ComparisonResult result;
    ExperimentConfig hpp = config;
    hpp.mode = InteractionMode::hpp;
    hpp.output_dir = config.output_dir / "hpp";
    result.hpp = run_experiment(hpp);

    ExperimentConfig phase = config;
    phase.mode = InteractionMode::phase;
    phase.output_dir = config.output_dir / "phase";
    result.phase = run_experiment(phase);

    write_text_file(config.output_dir / "compare.csv", [&](std::ostream& out) {
        out << "t,sigma_hpp,sigma_phase,entropy_hpp,entropy_phase\n";
        for (std::size_t i = 0; i < result.hpp.sigma.size(); ++i) {
            out << result.hpp.sigma[i].t << ',' << format_double(result.hpp.sigma[i].value) << ','
                << format_double(result.phase.sigma[i].value) << ',' << format_double(result.hpp.entropy[i].value)
                << ',' << format_double(result.phase.entropy[i].value) << '\n';
        }
    });
    return result;
}

}  // namespace qwalk
