// campaign-forensics: CSV helpers.
// SPDX-License-Identifier: MIT
#include "cfx/util/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace cfx {

bool split_csv_line(const std::string& line, std::vector<std::string>& fields) {
    fields.clear();
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    const std::size_t n = line.size();
    // Trim a trailing carriage return (files written on Windows).
    const std::size_t limit = (n > 0 && line[n - 1] == '\r') ? n - 1 : n;
    bool field_was_quoted = false;
    while (i < limit) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < limit && line[i + 1] == '"') {  // escaped quote
                    current.push_back('"');
                    i += 2;
                    continue;
                }
                in_quotes = false;
                ++i;
                continue;
            }
            current.push_back(c);
            ++i;
            continue;
        }
        if (c == '"') {
            if (!current.empty() || field_was_quoted) return false;  // quote mid-field
            in_quotes = true;
            field_was_quoted = true;
            ++i;
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
            field_was_quoted = false;
            ++i;
            continue;
        }
        if (field_was_quoted) return false;  // garbage after closing quote
        current.push_back(c);
        ++i;
    }
    if (in_quotes) return false;  // unterminated quote
    fields.push_back(std::move(current));
    return true;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos ||
                              (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) return field;
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    return out;
}

std::vector<std::string> split_semicolon_list(const std::string& field) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= field.size()) {
        const std::size_t end = field.find(';', start);
        const std::size_t stop = (end == std::string::npos) ? field.size() : end;
        if (stop > start) items.emplace_back(field, start, stop - start);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return items;
}

std::string format_double(double value) {
    // Shortest representation that parses back to the same double: try
    // increasing precision until round-trip succeeds (17 always does).
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == value || (std::isnan(back) && std::isnan(value))) break;
    }
    return buf;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    // Avoid the signed-zero artifact "-0.0" in presentation tables.
    if (std::strncmp(buf, "-0", 2) == 0) {
        bool all_zero = true;
        for (const char* p = buf + 1; *p; ++p) {
            if (*p != '0' && *p != '.') {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return buf + 1;
    }
    return buf;
}

}  // namespace cfx
