#pragma once

// Data documents emitted by the tool. CSV: `# key=value` header lines, then
// a row `x,<label 1>,<label 2>,...` and one row per abscissa (union of the
// series grids, blank where a series has no sample). JSON:
// {schema_version, config, series: [{label, params, ..., points: [[x, y], ...]}]}.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ghcs::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Series {
    std::string label;
    Json meta = Json::object();  // params, domain, tolerances, ...
    std::vector<std::pair<double, double>> points;
};

struct Document {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Series> series;

    void set(const std::string& key, const std::string& value);
};

std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);
std::string render(const Document& doc, const std::string& format);

// Writes text to path atomically (temporary file in the same directory, then
// rename); an empty path or "-" writes to stdout. Throws std::runtime_error.
void write_output(const std::string& text, const std::string& path);

}  // namespace ghcs::cli
