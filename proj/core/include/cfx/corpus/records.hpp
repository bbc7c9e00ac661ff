// campaign-forensics: tweet corpus domain model (columnar storage).
// SPDX-License-Identifier: MIT
//
// Corpora reach hundreds of millions of rows at full scale, so records are
// stored column-wise: string-valued fields are interned to dense uint32 ids
// and list-valued fields live in flat arrays indexed CSR-style.  All
// analysis stages run on these dense ids; the interners translate back to
// the original strings only at export time.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfx/util/interner.hpp"
#include "cfx/util/time.hpp"

namespace cfx {

/// Interaction type of a tweet event.
enum class TweetKind : std::uint8_t {
    original = 0,   ///< fresh authored content
    retweet = 1,    ///< repost of target's tweet
    reply = 2,      ///< direct reply to target's tweet
    quote = 3,      ///< quote-retweet of target's tweet
    mention = 4,    ///< carries mentions only (no repost relationship)
};
inline constexpr int kTweetKindCount = 5;

/// Canonical lowercase token for each kind (file format).
std::string_view tweet_kind_token(TweetKind kind);
/// Parse a kind token; returns false on unknown token.
bool parse_tweet_kind(std::string_view token, TweetKind& out);

/// Dense id for "no user" (absent target).
inline constexpr std::uint32_t kNoUser = StringInterner::npos;

/// Column-oriented tweet collection.  Immutable after ingest; safe to share
/// across threads.
struct Corpus {
    StringInterner users;     ///< author, target, and mentioned user ids
    StringInterner domains;   ///< normalized URL domains
    StringInterner hashtags;  ///< lowercase hashtags
    StringInterner clients;   ///< posting application names

    // Tweet ids, concatenated; id i spans [tweet_id_offsets[i], tweet_id_offsets[i+1]).
    std::string tweet_id_blob;
    std::vector<std::uint64_t> tweet_id_offsets{0};

    std::vector<std::uint32_t> author;       ///< user id per record
    std::vector<UnixTime> timestamp;         ///< UTC seconds per record
    std::vector<TweetKind> kind;             ///< interaction type per record
    std::vector<std::uint32_t> target;       ///< referenced user or kNoUser

    // CSR lists (offsets have size()+1 entries each).
    std::vector<std::uint32_t> mention_data;
    std::vector<std::uint64_t> mention_offsets{0};
    std::vector<std::uint32_t> url_data;
    std::vector<std::uint64_t> url_offsets{0};
    std::vector<std::uint32_t> hashtag_data;
    std::vector<std::uint64_t> hashtag_offsets{0};

    std::vector<std::uint32_t> client;       ///< client id per record

    TimeWindow window;                       ///< observation window of this corpus

    std::size_t size() const { return author.size(); }

    std::string_view tweet_id(std::size_t i) const {
        return std::string_view(tweet_id_blob)
            .substr(tweet_id_offsets[i], tweet_id_offsets[i + 1] - tweet_id_offsets[i]);
    }

    /// Span accessors for the CSR lists of record i.
    struct IdSpan {
        const std::uint32_t* begin_;
        const std::uint32_t* end_;
        const std::uint32_t* begin() const { return begin_; }
        const std::uint32_t* end() const { return end_; }
        std::size_t size() const { return static_cast<std::size_t>(end_ - begin_); }
        bool empty() const { return begin_ == end_; }
        std::uint32_t operator[](std::size_t k) const { return begin_[k]; }
    };
    IdSpan mentions(std::size_t i) const {
        return {mention_data.data() + mention_offsets[i], mention_data.data() + mention_offsets[i + 1]};
    }
    IdSpan urls(std::size_t i) const {
        return {url_data.data() + url_offsets[i], url_data.data() + url_offsets[i + 1]};
    }
    IdSpan tags(std::size_t i) const {
        return {hashtag_data.data() + hashtag_offsets[i], hashtag_data.data() + hashtag_offsets[i + 1]};
    }
};

/// Lowercase a URL-ish string and reduce it to its host: scheme and
/// path/query/fragment stripped, leading "www." removed.
std::string normalize_domain(std::string_view url);

}  // namespace cfx
