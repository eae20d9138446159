#include "relosc/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace relosc::io {

namespace {

// Quote a CSV cell only when it would otherwise break the row structure.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_cell(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c))
        return std::to_string(std::get<std::int64_t>(c));
    if (std::holds_alternative<double>(c))
        return format_double(std::get<double>(c));
    return std::get<std::string>(c);
}

std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (const auto& [key, value] : t.metadata)
        out << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(t.columns[i]);
    }
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(render_cell(row[i]));
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"];
    meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : t.metadata) meta[key] = value;
    doc["columns"] = t.columns;
    auto& rows = doc["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<std::int64_t>(cell))
                jrow.push_back(std::get<std::int64_t>(cell));
            else if (std::holds_alternative<double>(cell))
                jrow.push_back(std::get<double>(cell));
            else
                jrow.push_back(std::get<std::string>(cell));
        }
        rows.push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
}

Metadata parse_metadata(const std::string& content) {
    Metadata meta;
    const auto first =
        content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        const auto doc = nlohmann::ordered_json::parse(content);
        if (doc.contains("metadata"))
            for (const auto& [key, value] : doc.at("metadata").items())
                meta.emplace_back(key, value.get<std::string>());
        return meta;
    }
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) != 0) break;  // metadata block ends
        const auto sep = line.find(": ", 2);
        if (sep == std::string::npos) continue;
        meta.emplace_back(line.substr(2, sep - 2), line.substr(sep + 2));
    }
    return meta;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open temporary file " +
                                     tmp.string());
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace relosc::io
