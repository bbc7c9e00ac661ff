// campaign-forensics: corpus loading, validation, round-trip export.
// SPDX-License-Identifier: MIT
#include "cfx/corpus/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>

#include "json.hpp"

#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"

namespace cfx {
namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string strip_hash(std::string tag) {
    if (!tag.empty() && tag[0] == '#') tag.erase(0, 1);
    return tag;
}

bool has_jsonl_extension(const std::string& path) {
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos) return false;
    const std::string ext = lower(path.substr(dot + 1));
    return ext == "jsonl" || ext == "ndjson" || ext == "json";
}

/// One parsed-but-not-yet-interned record; string fields reference the
/// per-line buffers, so the caller interns before reading the next line.
struct RawRecord {
    std::string tweet_id;
    std::string author_id;
    UnixTime timestamp = 0;
    TweetKind kind = TweetKind::original;
    std::string target_user_id;  // empty = absent
    std::vector<std::string> mentions;
    std::vector<std::string> urls;
    std::vector<std::string> hashtags;
    std::string client;
};

/// Parse one CSV line into `raw`; returns an error reason or nullptr.
const char* parse_csv_record(const std::string& line, std::vector<std::string>& fields,
                             RawRecord& raw) {
    if (!split_csv_line(line, fields)) return "bad CSV quoting";
    if (fields.size() != 9) return "expected 9 fields";
    raw.tweet_id = fields[0];
    raw.author_id = fields[1];
    if (raw.tweet_id.empty()) return "empty tweet_id";
    if (raw.author_id.empty()) return "empty author_id";
    const auto ts = parse_iso8601_utc(fields[2]);
    if (!ts) return "bad timestamp (want YYYY-MM-DDTHH:MM:SSZ)";
    raw.timestamp = *ts;
    if (!parse_tweet_kind(fields[3], raw.kind)) return "unknown kind";
    raw.target_user_id = fields[4];
    raw.mentions = split_semicolon_list(fields[5]);
    raw.urls = split_semicolon_list(fields[6]);
    raw.hashtags = split_semicolon_list(fields[7]);
    raw.client = fields[8];
    return nullptr;
}

/// Read a JSON value that is either an array of strings or a ;-separated
/// string.  Returns false on any other shape.
bool read_string_list(const json& j, const char* key, std::vector<std::string>& out) {
    out.clear();
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return true;
    if (it->is_string()) {
        out = split_semicolon_list(it->get<std::string>());
        return true;
    }
    if (it->is_array()) {
        for (const auto& item : *it) {
            if (!item.is_string()) return false;
            if (!item.get<std::string>().empty()) out.push_back(item.get<std::string>());
        }
        return true;
    }
    return false;
}

const char* parse_jsonl_record(const std::string& line, RawRecord& raw) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return "bad JSON object";
    auto get_string = [&j](const char* key, std::string& out) {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) {
            out.clear();
            return true;
        }
        if (!it->is_string()) return false;
        out = it->get<std::string>();
        return true;
    };
    std::string timestamp, kind_token;
    if (!get_string("tweet_id", raw.tweet_id) || raw.tweet_id.empty()) return "empty tweet_id";
    if (!get_string("author_id", raw.author_id) || raw.author_id.empty())
        return "empty author_id";
    if (!get_string("timestamp", timestamp)) return "bad timestamp field";
    const auto ts = parse_iso8601_utc(timestamp);
    if (!ts) return "bad timestamp (want YYYY-MM-DDTHH:MM:SSZ)";
    raw.timestamp = *ts;
    if (!get_string("kind", kind_token) || !parse_tweet_kind(kind_token, raw.kind))
        return "unknown kind";
    if (!get_string("target_user_id", raw.target_user_id)) return "bad target_user_id";
    if (!read_string_list(j, "mentioned_user_ids", raw.mentions)) return "bad mentioned_user_ids";
    if (!read_string_list(j, "urls", raw.urls)) return "bad urls";
    if (!read_string_list(j, "hashtags", raw.hashtags)) return "bad hashtags";
    if (!get_string("client", raw.client)) return "bad client";
    return nullptr;
}

void append_record(Corpus& corpus, const RawRecord& raw) {
    corpus.tweet_id_blob += raw.tweet_id;
    corpus.tweet_id_offsets.push_back(corpus.tweet_id_blob.size());
    corpus.author.push_back(corpus.users.intern(raw.author_id));
    corpus.timestamp.push_back(raw.timestamp);
    corpus.kind.push_back(raw.kind);
    corpus.target.push_back(raw.target_user_id.empty() ? kNoUser
                                                       : corpus.users.intern(raw.target_user_id));
    for (const auto& m : raw.mentions) corpus.mention_data.push_back(corpus.users.intern(m));
    corpus.mention_offsets.push_back(corpus.mention_data.size());
    for (const auto& u : raw.urls)
        corpus.url_data.push_back(corpus.domains.intern(normalize_domain(u)));
    corpus.url_offsets.push_back(corpus.url_data.size());
    for (const auto& h : raw.hashtags)
        corpus.hashtag_data.push_back(corpus.hashtags.intern(lower(strip_hash(h))));
    corpus.hashtag_offsets.push_back(corpus.hashtag_data.size());
    corpus.client.push_back(corpus.clients.intern(raw.client));
}

/// Drop the records flagged in `drop` (same length as corpus.size()),
/// rebuilding the columnar arrays; interners are left as-is (unused ids are
/// harmless and keep dense-id assignment deterministic).
void compact_corpus(Corpus& corpus, const std::vector<char>& drop) {
    Corpus out;
    out.users = std::move(corpus.users);
    out.domains = std::move(corpus.domains);
    out.hashtags = std::move(corpus.hashtags);
    out.clients = std::move(corpus.clients);
    out.window = corpus.window;
    const std::size_t n = corpus.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (drop[i]) continue;
        out.tweet_id_blob += corpus.tweet_id(i);
        out.tweet_id_offsets.push_back(out.tweet_id_blob.size());
        out.author.push_back(corpus.author[i]);
        out.timestamp.push_back(corpus.timestamp[i]);
        out.kind.push_back(corpus.kind[i]);
        out.target.push_back(corpus.target[i]);
        for (std::uint32_t m : corpus.mentions(i)) out.mention_data.push_back(m);
        out.mention_offsets.push_back(out.mention_data.size());
        for (std::uint32_t u : corpus.urls(i)) out.url_data.push_back(u);
        out.url_offsets.push_back(out.url_data.size());
        for (std::uint32_t h : corpus.tags(i)) out.hashtag_data.push_back(h);
        out.hashtag_offsets.push_back(out.hashtag_data.size());
        out.client.push_back(corpus.client[i]);
    }
    corpus = std::move(out);
}

}  // namespace

Corpus load_corpus(const std::string& path, const TimeWindow& window, IngestReport* report,
                   double max_malformed_fraction) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);
    const bool jsonl = has_jsonl_extension(path);

    Corpus corpus;
    corpus.window = window;
    IngestReport local;
    IngestReport& rep = report ? *report : local;
    rep = IngestReport{};
    std::vector<std::uint64_t> line_of_record;  // for duplicate reporting

    std::string line;
    std::vector<std::string> fields;
    RawRecord raw;
    std::uint64_t line_no = 0;
    bool first_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        if (first_line && !jsonl && line.rfind("tweet_id,", 0) == 0) {
            first_line = false;
            continue;  // optional CSV header
        }
        first_line = false;
        ++rep.lines;
        const char* error = jsonl ? parse_jsonl_record(line, raw)
                                  : parse_csv_record(line, fields, raw);
        if (error == nullptr && raw.target_user_id.empty() &&
            (raw.kind == TweetKind::retweet || raw.kind == TweetKind::reply ||
             raw.kind == TweetKind::quote))
            error = "retweet/reply/quote requires target_user_id";
        if (error != nullptr) {
            ++rep.malformed;
            if (rep.first_malformed.empty())
                rep.first_malformed =
                    path + ":" + std::to_string(line_no) + ": " + error;
            continue;
        }
        if (!window.contains(raw.timestamp)) {
            ++rep.outside_window;
            continue;
        }
        append_record(corpus, raw);
        line_of_record.push_back(line_no);
    }
    if (in.bad()) throw IoError("read error on corpus file: " + path);

    // Duplicate tweet_id detection: keep the first occurrence (storage order
    // equals line order), reject the rest.  Done by sorting record indices
    // by tweet id, which avoids a giant hash table at the 10M-row scale.
    const std::size_t n = corpus.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&corpus](std::uint32_t a, std::uint32_t b) {
        const auto ta = corpus.tweet_id(a);
        const auto tb = corpus.tweet_id(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    std::vector<char> drop(n, 0);
    std::uint64_t first_dup_line = 0;
    std::string first_dup_id;
    for (std::size_t k = 1; k < n; ++k) {
        if (corpus.tweet_id(order[k]) != corpus.tweet_id(order[k - 1])) continue;
        drop[order[k]] = 1;
        ++rep.duplicate_ids;
        const std::uint64_t dup_line = line_of_record[order[k]];
        if (first_dup_line == 0 || dup_line < first_dup_line) {
            first_dup_line = dup_line;
            first_dup_id = std::string(corpus.tweet_id(order[k]));
        }
    }
    if (rep.duplicate_ids > 0) {
        rep.malformed += rep.duplicate_ids;
        if (rep.first_malformed.empty())
            rep.first_malformed = path + ":" + std::to_string(first_dup_line) +
                                  ": duplicate tweet_id '" + first_dup_id + "'";
        compact_corpus(corpus, drop);
    }
    rep.accepted = corpus.size();

    if (rep.lines > 0 &&
        static_cast<double>(rep.malformed) >
            max_malformed_fraction * static_cast<double>(rep.lines))
        throw ValidationError("corpus " + path + ": " + std::to_string(rep.malformed) + " of " +
                              std::to_string(rep.lines) + " lines malformed (limit " +
                              std::to_string(max_malformed_fraction) + "); first: " +
                              rep.first_malformed);
    return corpus;
}

void write_corpus_csv(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write corpus file: " + path);
    out << "tweet_id,author_id,timestamp,kind,target_user_id,mentioned_user_ids,urls,hashtags,"
           "client\n";
    std::vector<std::string> fields(9);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        fields[0] = std::string(corpus.tweet_id(i));
        fields[1] = std::string(corpus.users.str(corpus.author[i]));
        fields[2] = format_iso8601_utc(corpus.timestamp[i]);
        fields[3] = std::string(tweet_kind_token(corpus.kind[i]));
        fields[4] = corpus.target[i] == kNoUser ? std::string()
                                                : std::string(corpus.users.str(corpus.target[i]));
        auto join = [](const auto& span, const StringInterner& interner) {
            std::string joined;
            bool first = true;
            for (std::uint32_t id : span) {
                if (!first) joined.push_back(';');
                joined += interner.str(id);
                first = false;
            }
            return joined;
        };
        fields[5] = join(corpus.mentions(i), corpus.users);
        fields[6] = join(corpus.urls(i), corpus.domains);
        fields[7] = join(corpus.tags(i), corpus.hashtags);
        fields[8] = std::string(corpus.clients.str(corpus.client[i]));
        out << join_csv_line(fields) << '\n';
    }
    if (!out) throw IoError("write error on corpus file: " + path);
}

std::optional<NewsCategory> tag_news_category(const Corpus& corpus, std::size_t i,
                                              const CategoryMap& map) {
    if (map.empty()) throw ValidationError("tag_news_category: empty category map");
    for (std::uint32_t domain_id : corpus.urls(i)) {
        const auto category = map.lookup_domain(corpus.domains.str(domain_id));
        if (category) return category;
    }
    return std::nullopt;
}

ResolvedStatuses resolve_statuses(const Corpus& corpus, const StatusTable& statuses) {
    ResolvedStatuses resolved;
    resolved.by_user.assign(corpus.users.size(), ResolvedStatuses::kAbsent);
    for (std::uint32_t u = 0; u < corpus.users.size(); ++u) {
        const auto status = statuses.lookup(corpus.users.str(u));
        if (status) resolved.by_user[u] = static_cast<std::uint8_t>(*status);
    }
    return resolved;
}

}  // namespace cfx
