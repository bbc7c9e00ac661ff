// campaign-forensics: seeded synthetic-corpus generation.
// SPDX-License-Identifier: MIT
//
// Produces a self-consistent bundle — corpus CSV plus the status, category,
// client, and stance-lexicon side tables — with realistic shape: diurnal
// activity, status-dependent behavior, camp-leaning hashtags, per-category
// news domains (all under the reserved ".example" TLD), and a small, fixed
// amount of malformed/duplicate/out-of-window input to exercise ingestion.
// Output is a pure function of the configuration; corpora of tens of
// millions of rows are written in streaming fashion.
#pragma once

#include <cstdint>
#include <string>

#include "cfx/util/time.hpp"

namespace cfx {

struct GeneratorConfig {
    std::uint64_t seed = 20160601;
    std::size_t tweets = 5000;
    TimeWindow window{};  ///< zero-initialized ⇒ the 14-day default window

    // User population by status (plus accounts absent from the status table).
    std::size_t ira_users = 12;
    std::size_t suspended_users = 60;
    std::size_t verified_users = 40;
    std::size_t not_verified_users = 300;
    std::size_t not_found_users = 60;
    std::size_t unlisted_users = 28;

    // Record-kind mix (remainder = originals).
    double retweet_share = 0.40;
    double reply_share = 0.10;
    double quote_share = 0.08;
    double mention_share = 0.12;

    double retweet_url_probability = 0.70;  ///< repost carries a news URL
    double ira_target_probability = 0.18;   ///< non-seed interaction aimed at a seed

    // Deliberately bad input, spread evenly through the file.
    std::size_t malformed_lines = 5;
    std::size_t duplicate_lines = 3;
    std::size_t outside_window_lines = 10;

    /// Committed test-fixture profile (5,000 tweets, ~500 users, 14 days).
    static GeneratorConfig fixture_profile();
    /// Large-scale profile sized to produce at least `edges` interaction rows.
    static GeneratorConfig smoke_profile(std::size_t edges);
};

struct GeneratorOutput {
    std::string corpus_path;
    std::string statuses_path;
    std::string categories_path;
    std::string clients_path;
    std::string lexicon_path;
    std::size_t lines_written = 0;
    std::size_t valid_tweets = 0;
};

/// Write the bundle into `out_dir` (created if missing).
GeneratorOutput generate_corpus_files(const GeneratorConfig& config, const std::string& out_dir);

}  // namespace cfx
