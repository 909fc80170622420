#include "qwalk/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace qwalk {

std::string format_double(double value) {
    char buf[40];
    const int n = std::snprintf(buf, sizeof(buf), "%.16e", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    }
    return out;
}

std::string step_file_name(std::string_view prefix, int step, std::string_view suffix) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%03d", step);
    return std::string(prefix) + buf + std::string(suffix);
}

void write_heatmap_csv(const ProbabilityGrid& grid, std::ostream& out) {
    out << "x,y,p\n";
    for (const auto& [node, p] : grid) {
        if (p != 0.0) {
            out << node.x << ',' << node.y << ',' << format_double(p) << '\n';
        }
    }
}

void emit_heatmap_csv(const ProbabilityGrid& grid, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    write_heatmap_csv(grid, out);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) {
            return fields;
        }
        start = comma + 1;
    }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

ProbabilityGrid parse_heatmap_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y,p") {
        throw std::runtime_error("heatmap CSV must start with header x,y,p");
    }
    ProbabilityGrid grid;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 3 fields");
        }
        grid.set({parse_field<int>(fields[0], line_no), parse_field<int>(fields[1], line_no)},
                 parse_field<double>(fields[2], line_no));
    }
    return grid;
}

ProbabilityGrid read_heatmap_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + ": " + std::strerror(errno));
    }
    return parse_heatmap_csv(in);
}

void write_series_csv(const std::vector<SeriesPoint>& series, std::string_view column, std::ostream& out) {
    out << "t," << column << '\n';
    for (const auto& p : series) {
        out << p.t << ',' << format_double(p.value) << '\n';
    }
}

std::vector<SeriesPoint> parse_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,", 0) != 0) {
        throw std::runtime_error("series CSV must start with header t,<column>");
    }
    std::vector<SeriesPoint> series;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 2 fields");
        }
        series.push_back({parse_field<int>(fields[0], line_no), parse_field<double>(fields[1], line_no)});
    }
    return series;
}

void write_manifest(const Manifest& manifest, std::ostream& out) {
    for (const auto& [key, value] : manifest) {
        out << key << '=' << value << '\n';
    }
}

Manifest parse_manifest(std::istream& in) {
    Manifest manifest;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t eq = line.find('=');
        if (line.empty() || eq == std::string::npos) {
            continue;
        }
        manifest.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return manifest;
}

}  // namespace qwalk
