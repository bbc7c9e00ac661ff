// campaign-forensics: corpus loading and validation.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>

#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"
#include "cfx/util/time.hpp"

namespace cfx {

/// Per-load statistics, reported by `cfx ingest-check` and recorded in the
/// run manifest.
struct IngestReport {
    std::uint64_t lines = 0;           ///< non-empty data lines seen
    std::uint64_t accepted = 0;        ///< records in the returned corpus
    std::uint64_t malformed = 0;       ///< bad field count/timestamp/kind/... (includes duplicates)
    std::uint64_t duplicate_ids = 0;   ///< repeated tweet_id (rejected, counted in malformed)
    std::uint64_t outside_window = 0;  ///< well-formed but outside the window
    std::string first_malformed;       ///< "path:line: reason" of the first offender
};

/// Fraction of malformed lines above which loading aborts.
inline constexpr double kDefaultMaxMalformedFraction = 0.10;

/// Load a line-delimited corpus (CSV or JSON Lines, auto-detected from the
/// extension: .jsonl/.ndjson/.json → JSON Lines, anything else → CSV).
/// Only records inside `window` are returned; malformed lines are counted
/// and reported, not fatal, unless their fraction exceeds
/// `max_malformed_fraction` (then: ValidationError naming the first
/// offender).  Unreadable file → IoError.
///
/// CSV columns (header row optional, detected by a leading "tweet_id"):
///   tweet_id,author_id,timestamp,kind,target_user_id,
///   mentioned_user_ids,urls,hashtags,client
/// with ISO-8601 UTC timestamps and ;-separated list fields.  JSON Lines
/// uses the same keys; list fields may be arrays or ;-separated strings.
Corpus load_corpus(const std::string& path, const TimeWindow& window, IngestReport* report = nullptr,
                   double max_malformed_fraction = kDefaultMaxMalformedFraction);

/// Write `corpus` back to CSV in storage order.  Loading the result with the
/// same window yields an equal corpus (round-trip property).
void write_corpus_csv(const Corpus& corpus, const std::string& path);

/// Category of the first mapped URL domain of record `i`, if any.
std::optional<NewsCategory> tag_news_category(const Corpus& corpus, std::size_t i,
                                              const CategoryMap& map);

/// Status of each interned user, resolved once (kNoUser-safe helpers live on
/// the result).  Users absent from the table get `fallback` when provided by
/// callers at use sites; the vector stores an explicit "absent" marker.
struct ResolvedStatuses {
    static constexpr std::uint8_t kAbsent = 0xff;
    std::vector<std::uint8_t> by_user;  ///< AccountStatus value or kAbsent

    bool known(std::uint32_t user) const { return by_user[user] != kAbsent; }
    AccountStatus status_or(std::uint32_t user, AccountStatus fallback) const {
        const std::uint8_t raw = by_user[user];
        return raw == kAbsent ? fallback : static_cast<AccountStatus>(raw);
    }
};

/// Resolve the status of every user interned in `corpus`.
ResolvedStatuses resolve_statuses(const Corpus& corpus, const StatusTable& statuses);

}  // namespace cfx
