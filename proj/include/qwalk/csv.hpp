#pragma once

// Plain-text outputs: heatmap and series CSVs, run manifests.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/observables.hpp"
#include "qwalk/probability_grid.hpp"

namespace qwalk {

/// 17 significant digits in exponent form ("%.16e"); round-trips exactly.
std::string format_double(double value);

/// Header "x,y,p" and one row per nonzero cell, sorted by (x, y).
void write_heatmap_csv(const ProbabilityGrid& grid, std::ostream& out);
void emit_heatmap_csv(const ProbabilityGrid& grid, const std::filesystem::path& path);

/// Inverse of write_heatmap_csv. Throws std::runtime_error on malformed input.
ProbabilityGrid parse_heatmap_csv(std::istream& in);
ProbabilityGrid read_heatmap_csv(const std::filesystem::path& path);

/// Header "t,<column>" and one row per point.
void write_series_csv(const std::vector<SeriesPoint>& series, std::string_view column, std::ostream& out);
std::vector<SeriesPoint> parse_series_csv(std::istream& in);

using Manifest = std::vector<std::pair<std::string, std::string>>;

/// One "key=value" line per entry, in order.
void write_manifest(const Manifest& manifest, std::ostream& out);
Manifest parse_manifest(std::istream& in);

/// Opens `path` for writing or throws std::runtime_error naming the path and
/// the OS error.
std::ofstream open_output(const std::filesystem::path& path);

/// "marginal_t007.csv" style names: prefix, step zero-padded to 3 digits, suffix.
std::string step_file_name(std::string_view prefix, int step, std::string_view suffix);

}  // namespace qwalk
