#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "charsum/u128.hpp"

namespace charsum {

// One flat record of an experiment: ordered key -> value pairs.  Numeric
// formatting is fixed (%.17g for doubles) so identical runs serialize to
// identical bytes.
class ReportRow {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }
    void set(const std::string& key, double value);
    void set(const std::string& key, std::uint64_t value);
    void set(const std::string& key, int value) { set(key, static_cast<std::uint64_t>(value)); }
    void set(const std::string& key, unsigned value) { set(key, static_cast<std::uint64_t>(value)); }
    void set(const std::string& key, u128 value) { set(key, to_string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "1" : "0")); }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return kv_; }
    const std::string* find(const std::string& key) const;

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

class Report {
public:
    void add(ReportRow row) { rows_.push_back(std::move(row)); }
    const std::vector<ReportRow>& rows() const { return rows_; }

    // Columns are the union of row keys in first-seen order; missing cells
    // are empty.  Values containing separators or quotes are quoted.
    std::string to_csv() const;
    nlohmann::json to_json() const;

private:
    std::vector<ReportRow> rows_;
};

std::string format_double(double v);

// Writes content to a temporary file in the target directory, then renames
// it over path, so readers never observe a partial report.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace charsum
