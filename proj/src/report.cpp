#include "charsum/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "charsum/errors.hpp"

namespace charsum {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ReportRow::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : kv_) {
        if (k == key) { v = value; return; }
    }
    kv_.emplace_back(key, value);
}

void ReportRow::set(const std::string& key, double value) { set(key, format_double(value)); }

void ReportRow::set(const std::string& key, std::uint64_t value) {
    set(key, std::to_string(value));
}

const std::string* ReportRow::find(const std::string& key) const {
    for (const auto& [k, v] : kv_) {
        if (k == key) return &v;
    }
    return nullptr;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string Report::to_csv() const {
    std::vector<std::string> columns;
    for (const auto& row : rows_) {
        for (const auto& [k, v] : row.entries()) {
            bool seen = false;
            for (const auto& c : columns) {
                if (c == k) { seen = true; break; }
            }
            if (!seen) columns.push_back(k);
        }
    }
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(columns[i]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            if (const std::string* v = row.find(columns[i])) out += csv_escape(*v);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json r = nlohmann::json::object();
        for (const auto& [k, v] : row.entries()) r[k] = v;
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"rows", std::move(rows)}};
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw ValidationError("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace charsum
