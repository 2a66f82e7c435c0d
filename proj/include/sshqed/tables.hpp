// tables.hpp — deterministic tabular output. Tables carry preformatted cells
// so identical runs serialize to identical bytes; CSV and JSON writers share
// them, and matching parsers support round-trip checks.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sshqed/common.hpp"

namespace sshqed {

enum class OutputFormat { csv, json };

// 15-significant-digit scientific notation, the fixed on-disk float format.
std::string format_number(double value);
std::string format_integer(long long value);

struct OutputTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    // trailing "# key = value" records (audit values, not tabular data)
    std::vector<std::pair<std::string, std::string>> footnotes;

    void add_row(std::vector<std::string> cells);
    void add_footnote(const std::string& key, double value);
    void add_footnote(const std::string& key, const std::string& value);
};

std::string to_csv(const OutputTable& table);
std::string to_json(const OutputTable& table);
OutputTable parse_csv(const std::string& text);
OutputTable parse_json(const std::string& text);

// Writes <dir>/<name>.<ext>; creates the directory if needed. Returns the path.
std::filesystem::path write_table(const OutputTable& table,
                                  const std::filesystem::path& dir, OutputFormat format);

}  // namespace sshqed
