// campaign-forensics: reference tables.
// SPDX-License-Identifier: MIT
#include "cfx/corpus/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "cfx/corpus/records.hpp"
#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"

namespace cfx {
namespace {

std::string fold(std::string_view s) {
    std::string out;
    // Trim, then lowercase.
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s[i]))));
    return out;
}

/// Iterate "a,b" CSV rows of `path`, skipping blank/comment lines and an
/// optional header whose first cell equals `header_first`.
template <typename Fn>
void for_each_pair_row(const std::string& path, const char* header_first, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open table file: " + path);
    std::string line;
    std::vector<std::string> fields;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!split_csv_line(line, fields) || fields.size() != 2)
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": expected two comma-separated fields");
        if (line_no == 1 && fields[0] == header_first) continue;
        fn(fields[0], fields[1], line_no);
    }
}

}  // namespace

std::string_view account_status_token(AccountStatus status) {
    switch (status) {
        case AccountStatus::suspended: return "suspended";
        case AccountStatus::not_found: return "not_found";
        case AccountStatus::not_verified: return "not_verified";
        case AccountStatus::verified: return "verified";
        case AccountStatus::ira: return "ira";
    }
    return "not_found";
}

bool parse_account_status(std::string_view token, AccountStatus& out) {
    if (token == "suspended") out = AccountStatus::suspended;
    else if (token == "not_found") out = AccountStatus::not_found;
    else if (token == "not_verified") out = AccountStatus::not_verified;
    else if (token == "verified") out = AccountStatus::verified;
    else if (token == "ira") out = AccountStatus::ira;
    else return false;
    return true;
}

std::string_view news_category_token(NewsCategory category) {
    switch (category) {
        case NewsCategory::fake: return "fake";
        case NewsCategory::extreme_bias_right: return "extreme_bias_right";
        case NewsCategory::right: return "right";
        case NewsCategory::right_leaning: return "right_leaning";
        case NewsCategory::center: return "center";
        case NewsCategory::left_leaning: return "left_leaning";
        case NewsCategory::left: return "left";
        case NewsCategory::extreme_bias_left: return "extreme_bias_left";
    }
    return "center";
}

bool parse_news_category(std::string_view token, NewsCategory& out) {
    for (int c = 0; c < kNewsCategoryCount; ++c) {
        const auto category = static_cast<NewsCategory>(c);
        if (token == news_category_token(category)) {
            out = category;
            return true;
        }
    }
    return false;
}

std::string_view news_category_label(NewsCategory category) {
    switch (category) {
        case NewsCategory::fake: return "Fake news";
        case NewsCategory::extreme_bias_right: return "Extreme bias (right)";
        case NewsCategory::right: return "Right news";
        case NewsCategory::right_leaning: return "Right leaning news";
        case NewsCategory::center: return "Center news";
        case NewsCategory::left_leaning: return "Left leaning news";
        case NewsCategory::left: return "Left news";
        case NewsCategory::extreme_bias_left: return "Extreme bias (left)";
    }
    return "Center news";
}

// ---------------------------------------------------------------------------
// StatusTable

StatusTable StatusTable::load(const std::string& path) {
    std::vector<std::pair<std::string, AccountStatus>> rows;
    for_each_pair_row(path, "user_id", [&](const std::string& user, const std::string& token,
                                           int line_no) {
        AccountStatus status;
        if (!parse_account_status(token, status))
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": unknown account status: " + token);
        rows.emplace_back(user, status);
    });
    return from_rows(rows, path);
}

StatusTable StatusTable::from_rows(const std::vector<std::pair<std::string, AccountStatus>>& rows,
                                   const std::string& origin) {
    StatusTable table;
    std::string conflicts;
    for (const auto& [user, status] : rows) {
        auto [it, inserted] = table.map_.emplace(user, status);
        if (inserted || it->second == status) continue;
        // `ira` overrides any other label; other mixed pairs conflict.
        if (status == AccountStatus::ira || it->second == AccountStatus::ira) {
            it->second = AccountStatus::ira;
            continue;
        }
        conflicts += (conflicts.empty() ? "" : ", ");
        conflicts += user + " (" + std::string(account_status_token(it->second)) + " vs " +
                     std::string(account_status_token(status)) + ")";
    }
    if (!conflicts.empty())
        throw ValidationError(origin + ": conflicting statuses for: " + conflicts);
    return table;
}

std::optional<AccountStatus> StatusTable::lookup(std::string_view user_id) const {
    auto it = map_.find(std::string(user_id));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// CategoryMap

CategoryMap CategoryMap::load(const std::string& path) {
    std::vector<std::pair<std::string, NewsCategory>> rows;
    for_each_pair_row(path, "domain", [&](const std::string& domain, const std::string& token,
                                          int line_no) {
        NewsCategory category;
        if (!parse_news_category(token, category))
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": unknown news category: " + token);
        rows.emplace_back(domain, category);
    });
    return from_rows(rows, path);
}

CategoryMap CategoryMap::from_rows(const std::vector<std::pair<std::string, NewsCategory>>& rows,
                                   const std::string& origin) {
    CategoryMap map;
    for (const auto& [raw_domain, category] : rows) {
        const std::string domain = normalize_domain(raw_domain);
        auto [it, inserted] = map.map_.emplace(domain, category);
        if (!inserted && it->second != category)
            throw ValidationError(origin + ": domain " + domain +
                                  " mapped to two categories (" +
                                  std::string(news_category_token(it->second)) + " vs " +
                                  std::string(news_category_token(category)) + ")");
    }
    return map;
}

std::optional<NewsCategory> CategoryMap::lookup_domain(std::string_view normalized_domain) const {
    auto it = map_.find(std::string(normalized_domain));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// ClientRegistry

ClientRegistry ClientRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open client list: " + path);
    ClientRegistry registry;
    std::string line;
    while (std::getline(in, line)) {
        const std::string name = fold(line);
        if (name.empty() || name[0] == '#') continue;
        registry.names_.insert(name);
    }
    return registry;
}

ClientRegistry ClientRegistry::from_names(const std::vector<std::string>& names) {
    ClientRegistry registry;
    for (const auto& name : names) {
        const std::string folded = fold(name);
        if (!folded.empty()) registry.names_.insert(folded);
    }
    return registry;
}

bool ClientRegistry::is_official(std::string_view client) const {
    return names_.count(fold(client)) > 0;
}

// ---------------------------------------------------------------------------
// StanceLexicon

StanceLexicon StanceLexicon::load(const std::string& path) {
    std::vector<std::pair<std::string, Camp>> rows;
    for_each_pair_row(path, "hashtag", [&](const std::string& tag, const std::string& token,
                                           int line_no) {
        const std::string folded = fold(token);
        Camp camp;
        if (folded == "pro_t" || folded == "t") camp = Camp::pro_t;
        else if (folded == "pro_c" || folded == "c") camp = Camp::pro_c;
        else
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": unknown camp (want pro_t or pro_c): " + token);
        rows.emplace_back(fold(tag), camp);
    });
    return from_rows(rows, path);
}

StanceLexicon StanceLexicon::from_rows(const std::vector<std::pair<std::string, Camp>>& rows,
                                       const std::string& origin) {
    StanceLexicon lexicon;
    for (const auto& [tag, camp] : rows) {
        auto [it, inserted] = lexicon.map_.emplace(tag, camp);
        if (!inserted && it->second != camp)
            throw ValidationError(origin + ": hashtag listed under both camps: " + tag);
    }
    return lexicon;
}

std::optional<Camp> StanceLexicon::lookup(std::string_view hashtag) const {
    auto it = map_.find(std::string(hashtag));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void StanceLexicon::add(std::string_view hashtag, Camp camp) {
    map_.emplace(std::string(hashtag), camp);
}

}  // namespace cfx
