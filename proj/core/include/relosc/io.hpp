#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relosc::io {

using Cell = std::variant<std::int64_t, double, std::string>;
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Table {
    Metadata metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// 17 significant digits (%.17g): parses back to the identical double.
std::string format_double(double v);

std::string render_cell(const Cell& c);

// '#'-prefixed "key: value" metadata lines, then a header line, then one
// comma-separated line per row.
std::string render_csv(const Table& t);

// {"metadata": {...}, "columns": [...], "rows": [[...]]} with key order
// preserved; metadata values stay strings so they round-trip exactly.
std::string render_json(const Table& t);

// Extracts the metadata block of a rendered document: the "# key: value"
// lines of a CSV, or the "metadata" object of a JSON document (detected by a
// leading '{').
Metadata parse_metadata(const std::string& content);

// Writes via a temp file in the target directory plus rename, creating
// parent directories as needed.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace relosc::io
