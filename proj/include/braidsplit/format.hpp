#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "braidsplit/error.hpp"

namespace braidsplit {

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw UsageError("unknown format '" + std::string(s) + "' (expected text, csv or json)");
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json json_integer(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

inline nlohmann::json json_integer(const mpq_class& v) {
    if (v.get_den() != 1) return v.get_str();
    return json_integer(mpz_class(v.get_num()));
}

/// Quotes a CSV field when it contains a separator or quote.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

/// Display width in code points, so "⊕" counts once.
inline std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

/// Left-aligned columns separated by two spaces; no trailing whitespace.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace braidsplit
