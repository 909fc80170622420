#pragma once

// Experiment configuration documents (JSON).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/two_walker.hpp"

namespace qwalk {

enum class ExperimentKind { single, two_walker, classical };

std::string_view to_string(ExperimentKind kind);

/// A configuration key that failed to parse or validate.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

struct SingleTerm {
    CoinState coin;
    Node node;
    Amplitude amplitude;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::two_walker;

    /// Two-walker preset; empty when literal_terms is used.
    std::optional<InitialStateId> preset = InitialStateId::sep1;
    std::vector<Term> literal_terms;
    /// Single walker: literal amplitudes, or the max-spread state when empty.
    std::vector<SingleTerm> single_terms;

    InteractionMode mode = InteractionMode::hpp;
    int steps = 1;
    int observe_every = 1;
    std::pair<int, int> fit_window{1, 1};
    std::filesystem::path output_dir = "out";
    std::size_t budget = kDefaultAmplitudeBudget;

    // classical only
    std::uint64_t seed = 0;
    int size = 64;
    double density = 0.2;

    /// Human-readable initial-state label for manifests.
    std::string initial_label() const;
};

/// Parses and validates a JSON document. Keys:
///   kind           "single" | "two-walker" | "classical"       (required)
///   steps          integer >= 1                                (required)
///   initial        preset name or array of literal terms
///                    two-walker: sep1 | sep2 | grov | ent, terms {c1, c2, x1, y1, x2, y2, re, im}
///                    single:     max-spread, terms {c, x, y, re, im}
///   mode           none | hpp | phase (two-walker, default hpp)
///   observe_every  integer >= 1 dividing steps (default 1)
///   fit_window     [t_min, t_max] (default upper half of [0, steps])
///   output_dir     path (default "out")
///   budget         maximum stored amplitudes (default 2^27)
///   seed, size, density   classical only (defaults 0, 64, 0.2)
/// Unknown keys and keys that do not apply to the kind are errors.
ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a file; I/O failures are reported as ConfigError("config", ...).
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks cross-field constraints; parse_config calls this.
void validate_config(const ExperimentConfig& config);

/// Flat key/value description for the run manifest.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config);

}  // namespace qwalk
