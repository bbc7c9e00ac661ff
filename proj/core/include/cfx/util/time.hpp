// campaign-forensics: ISO-8601 UTC timestamps and fixed-width time binning.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cfx {

/// Seconds since the Unix epoch, UTC.  All corpus timestamps are UTC with
/// second resolution, so a signed 64-bit count is exact and comparison-safe.
using UnixTime = std::int64_t;

/// Parse "YYYY-MM-DDTHH:MM:SSZ" (strict: UTC designator required, no
/// fractional seconds).  Returns nullopt on any malformation.
std::optional<UnixTime> parse_iso8601_utc(const std::string& text);

/// Format a UnixTime back to "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601_utc(UnixTime t);

/// Closed time interval [start, end] in Unix seconds.
struct TimeWindow {
    UnixTime start = 0;
    UnixTime end = 0;

    bool contains(UnixTime t) const { return t >= start && t <= end; }

    /// Number of `bin_seconds`-wide bins covering the window (last bin may be
    /// partial).  bin_seconds must be positive.
    std::int64_t bin_count(std::int64_t bin_seconds) const {
        return (end - start) / bin_seconds + 1;
    }

    /// Bin index of `t` (caller guarantees contains(t)).
    std::int64_t bin_of(UnixTime t, std::int64_t bin_seconds) const {
        return (t - start) / bin_seconds;
    }
};

/// 15-minute activity bins; 96 per day.
inline constexpr std::int64_t kActivityBinSeconds = 15 * 60;
inline constexpr int kBinsPerDay = 96;

}  // namespace cfx
