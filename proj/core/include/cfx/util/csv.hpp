// campaign-forensics: minimal CSV reading/writing (RFC-4180 quoting).
// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfx {

/// Split one CSV line into fields.  Handles double-quoted fields with
/// embedded commas and doubled quotes; does not handle embedded newlines
/// (corpus files are strictly line-delimited).  Returns false on a quoting
/// error (unterminated quote, garbage after closing quote).
bool split_csv_line(const std::string& line, std::vector<std::string>& fields);

/// Quote a field if it contains a comma, quote, or leading/trailing space.
std::string csv_escape(const std::string& field);

/// Join fields into one CSV line (no trailing newline).
std::string join_csv_line(const std::vector<std::string>& fields);

/// Split a ;-separated list field (no quoting inside; empty input → empty
/// vector; empty items dropped).
std::vector<std::string> split_semicolon_list(const std::string& field);

/// Format a double with enough digits to round-trip (shortest of %.17g that
/// parses back equal), used by all machine-readable exports.
std::string format_double(double value);

/// Fixed-decimal formatting for presentation tables (e.g. one decimal for
/// degree tables, two for percentage tables).
std::string format_fixed(double value, int decimals);

}  // namespace cfx
