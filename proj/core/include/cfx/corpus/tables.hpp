// campaign-forensics: reference tables (account statuses, outlet categories,
// official clients, stance lexicon).
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cfx {

/// Account moderation/verification status at collection time.
enum class AccountStatus : std::uint8_t {
    suspended = 0,
    not_found = 1,
    not_verified = 2,
    verified = 3,
    ira = 4,  ///< officially identified influence-operation account
};
inline constexpr int kAccountStatusCount = 5;

std::string_view account_status_token(AccountStatus status);
bool parse_account_status(std::string_view token, AccountStatus& out);

/// News outlet category (eight bias/quality buckets).
enum class NewsCategory : std::uint8_t {
    fake = 0,
    extreme_bias_right = 1,
    right = 2,
    right_leaning = 3,
    center = 4,
    left_leaning = 5,
    left = 6,
    extreme_bias_left = 7,
};
inline constexpr int kNewsCategoryCount = 8;

std::string_view news_category_token(NewsCategory category);
bool parse_news_category(std::string_view token, NewsCategory& out);
/// Human-readable label used in presentation tables ("Fake news", ...).
std::string_view news_category_label(NewsCategory category);

/// user id (string) → status.  Duplicate rows with conflicting statuses are
/// a validation error, except that `ira` always wins over any other label.
class StatusTable {
public:
    /// CSV rows "user_id,status" (optional header).  Throws on conflicts.
    static StatusTable load(const std::string& path);
    static StatusTable from_rows(
        const std::vector<std::pair<std::string, AccountStatus>>& rows,
        const std::string& origin = "<memory>");

    std::optional<AccountStatus> lookup(std::string_view user_id) const;
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::string, AccountStatus>& entries() const { return map_; }

private:
    std::unordered_map<std::string, AccountStatus> map_;
};

/// Normalized domain → category.  Each domain maps to exactly one category.
class CategoryMap {
public:
    /// CSV rows "domain,category" (optional header).  Domains are normalized
    /// on load; duplicate domains with different categories throw.
    static CategoryMap load(const std::string& path);
    static CategoryMap from_rows(
        const std::vector<std::pair<std::string, NewsCategory>>& rows,
        const std::string& origin = "<memory>");

    std::optional<NewsCategory> lookup_domain(std::string_view normalized_domain) const;
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::string, NewsCategory>& entries() const { return map_; }

private:
    std::unordered_map<std::string, NewsCategory> map_;
};

/// Official posting applications; membership is case-insensitive on the
/// trimmed client name.
class ClientRegistry {
public:
    /// One client name per line ("#" comments and blank lines skipped).
    static ClientRegistry load(const std::string& path);
    static ClientRegistry from_names(const std::vector<std::string>& names);

    bool is_official(std::string_view client) const;
    std::size_t size() const { return names_.size(); }

private:
    std::unordered_set<std::string> names_;  // stored case-folded
};

/// Political camp of a stance-lexicon hashtag.
enum class Camp : std::uint8_t { pro_t = 0, pro_c = 1 };

/// Seed hashtags per camp, with optional one-round co-occurrence expansion
/// (performed by the stance module).
class StanceLexicon {
public:
    /// CSV rows "hashtag,camp" with camp ∈ {pro_t, pro_c} (optional header).
    /// A hashtag listed under both camps throws.
    static StanceLexicon load(const std::string& path);
    static StanceLexicon from_rows(const std::vector<std::pair<std::string, Camp>>& rows,
                                   const std::string& origin = "<memory>");

    std::optional<Camp> lookup(std::string_view hashtag) const;
    void add(std::string_view hashtag, Camp camp);
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::string, Camp>& entries() const { return map_; }

private:
    std::unordered_map<std::string, Camp> map_;
};

}  // namespace cfx
