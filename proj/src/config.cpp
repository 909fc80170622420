#include "qwalk/config.hpp"
#include "qwalk/observables.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace qwalk {

using nlohmann::json;

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::single:
            return "single";
        case ExperimentKind::two_walker:
            return "two-walker";
        case ExperimentKind::classical:
            return "classical";
    }
    return "?";
}

std::string ExperimentConfig::initial_label() const {
    switch (kind) {
        case ExperimentKind::two_walker:
            if (preset) {
                return std::string(to_string(*preset));
            }
            return "literal(" + std::to_string(literal_terms.size()) + " terms)";
        case ExperimentKind::single:
            if (single_terms.empty()) {
                return "max-spread";
            }
            return "literal(" + std::to_string(single_terms.size()) + " terms)";
        case ExperimentKind::classical:
            return "random(density=" + std::to_string(density) + ")";
    }
    return "?";
}

namespace {

int get_int(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(key, "expected an integer");
    }
    const auto value = v.get<long long>();
    if (value < INT32_MIN || value > INT32_MAX) {
        throw ConfigError(key, "integer out of range");
    }
    return static_cast<int>(value);
}

double get_number(const json& doc, const std::string& key, const std::string& label) {
    const json& v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError(label, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ConfigError(label, "must be finite");
    }
    return d;
}

std::string get_string(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_string()) {
        throw ConfigError(key, "expected a string");
    }
    return v.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(prefix + key, "unknown key");
        }
    }
}

int term_int(const json& term, const char* key, const std::string& where) {
    if (!term.contains(key) || !term.at(key).is_number_integer()) {
        throw ConfigError(where + "." + key, "expected an integer");
    }
    return term.at(key).get<int>();
}

CoinState term_coin(const json& term, const char* key, const std::string& where) {
    if (!term.contains(key) || !term.at(key).is_string()) {
        throw ConfigError(where + "." + key, "expected a coin string such as \"01\"");
    }
    try {
        return parse_coin(term.at(key).get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + "." + key, e.what());
    }
}

Amplitude term_amplitude(const json& term, const std::string& where) {
    if (!term.contains("re")) {
        throw ConfigError(where + ".re", "missing real part");
    }
    const double re = get_number(term, "re", where + ".re");
    const double im = term.contains("im") ? get_number(term, "im", where + ".im") : 0.0;
    return {re, im};
}

void check_unit_norm(double norm_sq) {
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "literal amplitudes have squared norm " << norm_sq << "; must be 1 within " << kNormTolerance;
        throw ConfigError("initial", msg.str());
    }
}

void parse_two_walker_initial(const json& v, ExperimentConfig& cfg) {
    if (v.is_string()) {
        try {
            cfg.preset = parse_initial(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError("initial", e.what());
        }
        return;
    }
    if (!v.is_array() || v.empty()) {
        throw ConfigError("initial", "expected a preset name or a nonempty array of terms");
    }
    cfg.preset.reset();
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string where = "initial[" + std::to_string(i) + "]";
        const json& term = v[i];
        if (!term.is_object()) {
            throw ConfigError(where, "expected an object");
        }
        reject_unknown(term, {"c1", "c2", "x1", "y1", "x2", "y2", "re", "im"}, where + ".");
        Term t{term_coin(term, "c1", where),
               term_coin(term, "c2", where),
               {term_int(term, "x1", where), term_int(term, "y1", where)},
               {term_int(term, "x2", where), term_int(term, "y2", where)},
               term_amplitude(term, where)};
        norm_sq += std::norm(t.amplitude);
        cfg.literal_terms.push_back(t);
    }
    check_unit_norm(norm_sq);
    try {
        (void)TwoWalkerState::from_terms(cfg.literal_terms);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("initial", e.what());
    }
}

void parse_single_initial(const json& v, ExperimentConfig& cfg) {
    if (v.is_string()) {
        if (v.get<std::string>() != "max-spread") {
            throw ConfigError("initial", "single-walker preset must be max-spread");
        }
        return;
    }
    if (!v.is_array() || v.empty()) {
        throw ConfigError("initial", "expected \"max-spread\" or a nonempty array of terms");
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string where = "initial[" + std::to_string(i) + "]";
        const json& term = v[i];
        if (!term.is_object()) {
            throw ConfigError(where, "expected an object");
        }
        reject_unknown(term, {"c", "x", "y", "re", "im"}, where + ".");
        SingleTerm t{term_coin(term, "c", where), {term_int(term, "x", where), term_int(term, "y", where)},
                     term_amplitude(term, where)};
        norm_sq += std::norm(t.amplitude);
        cfg.single_terms.push_back(t);
    }
    check_unit_norm(norm_sq);
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.steps < 1) {
        throw ConfigError("steps", "must be at least 1");
    }
    if (cfg.observe_every < 1) {
        throw ConfigError("observe_every", "must be at least 1");
    }
    if (cfg.steps % cfg.observe_every != 0) {
        throw ConfigError("observe_every", "must divide steps (" + std::to_string(cfg.steps) + ")");
    }
    if (cfg.budget == 0) {
        throw ConfigError("budget", "must be positive");
    }
    if (cfg.kind == ExperimentKind::classical) {
        if (cfg.size < 2 || cfg.size % 2 != 0) {
            throw ConfigError("size", "must be a positive even integer");
        }
        if (!(cfg.density >= 0.0 && cfg.density <= 1.0)) {
            throw ConfigError("density", "must lie in [0, 1]");
        }
        return;
    }
    const auto [t_min, t_max] = cfg.fit_window;
    if (t_min < 0 || t_max > cfg.steps || t_min >= t_max) {
        throw ConfigError("fit_window", "needs 0 <= t_min < t_max <= steps");
    }
}

ExperimentConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config", "top level must be an object");
    }

    ExperimentConfig cfg;
    if (!doc.contains("kind")) {
        throw ConfigError("kind", "missing (single, two-walker, classical)");
    }
    const std::string kind = get_string(doc, "kind");
    if (kind == "single") {
        cfg.kind = ExperimentKind::single;
    } else if (kind == "two-walker") {
        cfg.kind = ExperimentKind::two_walker;
    } else if (kind == "classical") {
        cfg.kind = ExperimentKind::classical;
    } else {
        throw ConfigError("kind", "unknown kind '" + kind + "' (expected single, two-walker, classical)");
    }

    std::set<std::string> allowed{"kind", "steps", "observe_every", "output_dir", "budget"};
    switch (cfg.kind) {
        case ExperimentKind::two_walker:
            allowed.insert({"initial", "mode", "fit_window"});
            break;
        case ExperimentKind::single:
            allowed.insert({"initial", "fit_window"});
            break;
        case ExperimentKind::classical:
            allowed.insert({"seed", "size", "density"});
            break;
    }
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.contains(key)) {
            static const std::set<std::string> known{"kind",   "steps", "observe_every", "output_dir", "budget",
                                                     "initial", "mode", "fit_window", "seed", "size", "density"};
            throw ConfigError(key, known.contains(key) ? "not applicable to kind " + kind : "unknown key");
        }
    }

    if (!doc.contains("steps")) {
        throw ConfigError("steps", "missing");
    }
    cfg.steps = get_int(doc, "steps");
    if (cfg.steps < 1) {
        throw ConfigError("steps", "must be at least 1");
    }
    if (doc.contains("observe_every")) {
        cfg.observe_every = get_int(doc, "observe_every");
    }
    if (doc.contains("output_dir")) {
        cfg.output_dir = get_string(doc, "output_dir");
    }
    if (doc.contains("budget")) {
        const json& b = doc.at("budget");
        if (!b.is_number_integer() || b.get<long long>() <= 0) {
            throw ConfigError("budget", "must be a positive integer");
        }
        cfg.budget = b.get<std::size_t>();
    }

    if (cfg.kind == ExperimentKind::two_walker) {
        if (doc.contains("mode")) {
            try {
                cfg.mode = parse_mode(get_string(doc, "mode"));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("mode", e.what());
            }
        }
        if (!doc.contains("initial")) {
            throw ConfigError("initial", "missing (sep1, sep2, grov, ent, or a term list)");
        }
        parse_two_walker_initial(doc.at("initial"), cfg);
    } else if (cfg.kind == ExperimentKind::single) {
        cfg.preset.reset();
        if (doc.contains("initial")) {
            parse_single_initial(doc.at("initial"), cfg);
        }
    } else {
        cfg.preset.reset();
        if (doc.contains("seed")) {
            const json& s = doc.at("seed");
            if (!s.is_number_integer() || s.get<long long>() < 0) {
                throw ConfigError("seed", "must be a nonnegative integer");
            }
            cfg.seed = s.get<std::uint64_t>();
        }
        if (doc.contains("size")) {
            cfg.size = get_int(doc, "size");
        }
        if (doc.contains("density")) {
            cfg.density = get_number(doc, "density", "density");
        }
    }

    cfg.fit_window = default_fit_window(cfg.steps);
    if (doc.contains("fit_window")) {
        const json& w = doc.at("fit_window");
        if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
            throw ConfigError("fit_window", "expected [t_min, t_max]");
        }
        cfg.fit_window = {w[0].get<int>(), w[1].get<int>()};
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("kind", std::string(to_string(cfg.kind)));
    out.emplace_back("initial", cfg.initial_label());
    if (cfg.kind == ExperimentKind::two_walker) {
        out.emplace_back("mode", std::string(to_string(cfg.mode)));
    }
    out.emplace_back("steps", std::to_string(cfg.steps));
    out.emplace_back("observe_every", std::to_string(cfg.observe_every));
    if (cfg.kind != ExperimentKind::classical) {
        out.emplace_back("fit_window",
                         std::to_string(cfg.fit_window.first) + "," + std::to_string(cfg.fit_window.second));
    } else {
        out.emplace_back("seed", std::to_string(cfg.seed));
        out.emplace_back("size", std::to_string(cfg.size));
        std::ostringstream d;
        d.precision(17);
        d << cfg.density;
        out.emplace_back("density", d.str());
    }
    out.emplace_back("budget", std::to_string(cfg.budget));
    out.emplace_back("output_dir", cfg.output_dir.string());
    return out;
}

}  // namespace qwalk
