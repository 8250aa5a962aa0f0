#include "output.hpp"

#include "parse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

namespace ghcs::cli {
namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

Json number(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

void Document::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : config) {
        if (k == key) {
            v = value;
            return;
        }
    }
    config.emplace_back(key, value);
}

std::string render_csv(const Document& doc) {
    std::string out;
    for (const auto& [k, v] : doc.config) out += "# " + k + "=" + v + "\n";
    for (std::size_t i = 0; i < doc.series.size(); ++i) {
        const Series& s = doc.series[i];
        if (!s.meta.empty()) out += "# series." + std::to_string(i) + "=" + s.meta.dump() + "\n";
    }
    out += "x";
    for (const Series& s : doc.series) out += "," + csv_field(s.label);
    out += "\n";

    std::vector<double> grid;
    std::vector<std::map<double, double>> lookup(doc.series.size());
    for (std::size_t i = 0; i < doc.series.size(); ++i) {
        for (const auto& [x, y] : doc.series[i].points) {
            grid.push_back(x);
            lookup[i].emplace(x, y);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (double x : grid) {
        out += format_real(x);
        for (const auto& col : lookup) {
            out += ",";
            const auto it = col.find(x);
            if (it != col.end()) out += format_real(it->second);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const Document& doc) {
    Json root = Json::object();
    root["schema_version"] = kSchemaVersion;
    Json config = Json::object();
    for (const auto& [k, v] : doc.config) config[k] = v;
    root["config"] = config;
    Json series = Json::array();
    for (const Series& s : doc.series) {
        Json item = Json::object();
        item["label"] = s.label;
        for (const auto& [k, v] : s.meta.items()) item[k] = v;
        Json points = Json::array();
        for (const auto& [x, y] : s.points) points.push_back(Json::array({number(x), number(y)}));
        item["points"] = points;
        series.push_back(item);
    }
    root["series"] = series;
    return root.dump() + "\n";
}

std::string render(const Document& doc, const std::string& format) {
    return format == "json" ? render_json(doc) : render_csv(doc);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into place at " + path + ": " + ec.message());
    }
}

}  // namespace ghcs::cli
