// campaign-forensics: synthetic corpus writer.
// SPDX-License-Identifier: MIT
#include "cfx/corpus/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "cfx/corpus/tables.hpp"
#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/rng.hpp"

namespace cfx {

namespace {

enum Group : int { gIra = 0, gSuspended, gVerified, gNotVerified, gNotFound, gUnlisted, gCount };

constexpr const char* kOfficialClients[] = {"Web Client", "Phone App", "Tablet App", "Deck"};
constexpr const char* kUnofficialClients[] = {"AutoPilot 2.1", "CrossPoster", "GrowthSuite Pro"};

// Camp seed hashtags plus camp "companion" tags that only ever co-occur with
// one camp (food for the co-occurrence expansion rule).
constexpr const char* kSeedTagsT[] = {"maga", "trumptrain", "draintheswamp"};
constexpr const char* kSeedTagsC[] = {"imwithher", "strongertogether", "clintonkaine"};
constexpr const char* kCompanionT = "bigleaguewin";
constexpr const char* kCompanionC = "forwardtogether";
constexpr const char* kNeutralTags[] = {"election",  "debatenight", "vote2016", "politics",
                                        "pollwatch", "swingstate",  "townhall", "newsroom"};

// Three news domains per category, reserved-TLD only.
constexpr std::array<std::array<const char*, 3>, kNewsCategoryCount> kCategoryDomains = {{
    {"dailytruthwire.example", "realpatriotpress.example", "shockingscoop.example"},
    {"eaglealert.example", "frontierflag.example", "libertyblast.example"},
    {"conservativeledger.example", "heartlandherald.example", "redstatereview.example"},
    {"freemarketpost.example", "plainsgazette.example", "steadfasttimes.example"},
    {"nationaldesk.example", "civicrecord.example", "midlinemonitor.example"},
    {"harborjournal.example", "metrochronicle.example", "openforumnews.example"},
    {"progressledger.example", "unionbeacon.example", "bluecoastpost.example"},
    {"peoplesmegaphone.example", "vanguardvoice.example", "solidaritysignal.example"},
}};
constexpr const char* kUnmappedDomains[] = {"pics.example", "clips.example", "shop.example",
                                            "blog.example"};

struct Population {
    std::array<std::size_t, gCount> size{};
    std::array<std::size_t, gCount> base{};  ///< first user index of each group
    std::size_t total = 0;

    int group_of(std::size_t user) const {
        for (int g = gCount - 1; g >= 0; --g)
            if (user >= base[g]) return g;
        return gIra;
    }
};

std::string user_name(std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "u%07zu", index);
    return buf;
}

/// Latent camp leaning of a user: 0 = T, 1 = C, 2 = neutral; a pure hash of
/// (seed, user), so no per-user state is stored.
int leaning_of(std::uint64_t seed, std::size_t user, int group) {
    std::uint64_t h = seed ^ (0x9e3779b97f4a7c15ull * (user + 1));
    const double u = static_cast<double>(splitmix64(h) >> 11) * 0x1.0p-53;
    static constexpr double kTProb[gCount] = {0.55, 0.60, 0.15, 0.50, 0.50, 0.40};
    static constexpr double kCProb[gCount] = {0.25, 0.20, 0.65, 0.30, 0.30, 0.40};
    if (u < kTProb[group]) return 0;
    if (u < kTProb[group] + kCProb[group]) return 1;
    return 2;
}

/// Inverse-CDF sampler over a fixed weight table.
class Categorical {
public:
    explicit Categorical(std::vector<double> weights) : cdf_(std::move(weights)) {
        double run = 0.0;
        for (double& w : cdf_) {
            run += w;
            w = run;
        }
        total_ = run;
    }
    std::size_t draw(Rng& rng) const {
        const double u = rng.uniform() * total_;
        return static_cast<std::size_t>(
            std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
    }

private:
    std::vector<double> cdf_;
    double total_ = 0.0;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

}  // namespace

GeneratorConfig GeneratorConfig::fixture_profile() {
    GeneratorConfig c;
    c.window.start = *parse_iso8601_utc("2016-06-01T00:00:00Z");
    c.window.end = *parse_iso8601_utc("2016-06-14T23:59:59Z");
    return c;
}

GeneratorConfig GeneratorConfig::smoke_profile(std::size_t edges) {
    GeneratorConfig c = fixture_profile();
    // Nearly every record is a reposted news URL, so rows ≈ interaction edges.
    c.tweets = edges + edges / 20;
    c.retweet_share = 0.97;
    c.reply_share = 0.01;
    c.quote_share = 0.005;
    c.mention_share = 0.005;
    c.retweet_url_probability = 1.0;
    c.ira_users = 4000;
    c.suspended_users = 60000;
    c.verified_users = 50000;
    c.not_verified_users = 1500000;
    c.not_found_users = 150000;
    c.unlisted_users = 236000;
    c.malformed_lines = 0;
    c.duplicate_lines = 0;
    c.outside_window_lines = 0;
    return c;
}

GeneratorOutput generate_corpus_files(const GeneratorConfig& config, const std::string& out_dir) {
    if (config.tweets == 0) throw ValidationError("generator needs a positive tweet count");
    TimeWindow window = config.window;
    if (window.start == 0 && window.end == 0) window = fixture_profile().window;
    if (window.end <= window.start) throw ValidationError("generator window is empty");

    std::filesystem::create_directories(out_dir);
    GeneratorOutput result;
    result.corpus_path = out_dir + "/corpus.csv";
    result.statuses_path = out_dir + "/statuses.csv";
    result.categories_path = out_dir + "/categories.csv";
    result.clients_path = out_dir + "/clients.csv";
    result.lexicon_path = out_dir + "/lexicon.csv";

    Population pop;
    pop.size = {config.ira_users,      config.suspended_users, config.verified_users,
                config.not_verified_users, config.not_found_users, config.unlisted_users};
    for (int g = 0; g < gCount; ++g) {
        pop.base[g] = pop.total;
        pop.total += pop.size[g];
    }
    if (pop.total == 0) throw ValidationError("generator needs a non-empty user population");

    // --- side tables -------------------------------------------------------
    {
        auto out = open_out(result.statuses_path);
        out << "user_id,status\n";
        static constexpr AccountStatus kGroupStatus[gCount - 1] = {
            AccountStatus::ira, AccountStatus::suspended, AccountStatus::verified,
            AccountStatus::not_verified, AccountStatus::not_found};
        for (int g = 0; g < gUnlisted; ++g)
            for (std::size_t i = 0; i < pop.size[g]; ++i)
                out << user_name(pop.base[g] + i) << ','
                    << account_status_token(kGroupStatus[g]) << '\n';
    }
    {
        auto out = open_out(result.categories_path);
        out << "domain,category\n";
        for (int c = 0; c < kNewsCategoryCount; ++c)
            for (const char* domain : kCategoryDomains[c])
                out << domain << ',' << news_category_token(static_cast<NewsCategory>(c)) << '\n';
    }
    {
        auto out = open_out(result.clients_path);
        out << "# official posting clients\n";
        for (const char* name : kOfficialClients) out << name << '\n';
    }
    {
        auto out = open_out(result.lexicon_path);
        out << "hashtag,camp\n";
        for (const char* tag : kSeedTagsT) out << tag << ",pro_t\n";
        for (const char* tag : kSeedTagsC) out << tag << ",pro_c\n";
    }

    // --- samplers -----------------------------------------------------------
    Rng rng(config.seed);

    // Author-group propensities; content volume is dominated by regular users.
    Categorical author_group([&] {
        std::vector<double> w(gCount, 0.0);
        static constexpr double kGroupWeight[gCount] = {4.0, 14.0, 8.0, 60.0, 10.0, 4.0};
        for (int g = 0; g < gCount; ++g) w[g] = pop.size[g] > 0 ? kGroupWeight[g] : 0.0;
        return w;
    }());

    // Popularity for interaction targets: verified accounts dominate.
    Categorical target_group([&] {
        std::vector<double> w(gCount, 0.0);
        static constexpr double kPopWeight[gCount] = {2.0, 2.5, 12.0, 1.0, 1.5, 1.0};
        for (int g = 0; g < gCount; ++g)
            w[g] = pop.size[g] > 0 ? kPopWeight[g] * static_cast<double>(pop.size[g]) : 0.0;
        return w;
    }());

    // Diurnal bin profile, shared by all days.
    Categorical diurnal([] {
        std::vector<double> w(kBinsPerDay, 0.0);
        for (int b = 0; b < kBinsPerDay; ++b) {
            const double phase = 2.0 * 3.14159265358979323846 * b / kBinsPerDay;
            w[b] = 1.0 + 0.8 * std::sin(phase - 1.3);
        }
        return w;
    }());

    const std::int64_t days = (window.end + 1 - window.start) / 86400;

    const auto draw_user = [&](const Categorical& group_dist) {
        const int g = static_cast<int>(group_dist.draw(rng));
        return pop.base[g] + static_cast<std::size_t>(rng.bounded(pop.size[g]));
    };

    const auto draw_target = [&](std::size_t author) {
        const int author_group_id = pop.group_of(author);
        std::size_t target;
        if (author_group_id != gIra && pop.size[gIra] > 0 &&
            rng.uniform() < config.ira_target_probability) {
            target = pop.base[gIra] + static_cast<std::size_t>(rng.bounded(pop.size[gIra]));
        } else {
            target = draw_user(target_group);
        }
        // Self-interactions are legal input (the builders drop them), but a
        // quick redraw keeps them rare.
        if (target == author) target = draw_user(target_group);
        return target;
    };

    const auto pick_category = [&](int leaning) {
        static constexpr double kT[kNewsCategoryCount] = {14, 14, 22, 15, 15, 8, 7, 5};
        static constexpr double kC[kNewsCategoryCount] = {3, 4, 7, 10, 18, 22, 24, 12};
        static constexpr double kN[kNewsCategoryCount] = {6, 8, 14, 15, 24, 15, 12, 6};
        const double* w = leaning == 0 ? kT : leaning == 1 ? kC : kN;
        double total = 0.0;
        for (int c = 0; c < kNewsCategoryCount; ++c) total += w[c];
        double u = rng.uniform() * total;
        for (int c = 0; c < kNewsCategoryCount; ++c) {
            u -= w[c];
            if (u <= 0.0) return c;
        }
        return kNewsCategoryCount - 1;
    };

    // --- corpus -------------------------------------------------------------
    auto out = open_out(result.corpus_path);
    out << "tweet_id,author_id,timestamp,kind,target_user_id,mentioned_user_ids,urls,hashtags,"
           "client\n";

    const auto inject_every = [&](std::size_t count) {
        return count > 0 ? std::max<std::size_t>(1, config.tweets / (count + 1)) : 0;
    };
    const std::size_t malformed_every = inject_every(config.malformed_lines);
    const std::size_t duplicate_every = inject_every(config.duplicate_lines);
    const std::size_t outside_every = inject_every(config.outside_window_lines);
    std::size_t malformed_left = config.malformed_lines;
    std::size_t duplicate_left = config.duplicate_lines;
    std::size_t outside_left = config.outside_window_lines;

    std::vector<std::string> fields(9);
    std::string line;
    std::string previous_id;

    for (std::size_t rec = 0; rec < config.tweets; ++rec) {
        // Interleave deliberately bad lines at even spacing.
        if (malformed_left > 0 && malformed_every > 0 && rec % malformed_every == malformed_every - 1) {
            switch (malformed_left % 3) {
                case 0: out << "x" << rec << ",u0000001,not-a-time,original,,,,,Web Client\n"; break;
                case 1: out << "x" << rec << ",,2016-06-02T10:00:00Z,original,,,,,Web Client\n"; break;
                default: out << "x" << rec << ",u0000001,2016-06-02T10:00:00Z,boost,,,,,Web Client\n"; break;
            }
            --malformed_left;
            ++result.lines_written;
        }
        if (duplicate_left > 0 && duplicate_every > 0 && !previous_id.empty() &&
            rec % duplicate_every == duplicate_every - 2) {
            out << previous_id << ',' << user_name(rec % pop.total)
                << ",2016-06-03T12:00:00Z,original,,,," << kNeutralTags[0] << ",Web Client\n";
            --duplicate_left;
            ++result.lines_written;
        }
        if (outside_left > 0 && outside_every > 0 && rec % outside_every == outside_every - 1) {
            char idbuf[24];
            std::snprintf(idbuf, sizeof idbuf, "o%09zu", rec);
            out << idbuf << ',' << user_name(rec % pop.total)
                << ",2016-05-20T08:30:00Z,original,,,,,Web Client\n";
            --outside_left;
            ++result.lines_written;
        }

        const std::size_t author = draw_user(author_group);
        const int group = pop.group_of(author);
        const int leaning = leaning_of(config.seed, author, group);

        // Timestamp: uniform day, diurnal bin, uniform second.
        const std::int64_t day = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(days)));
        const std::int64_t bin = static_cast<std::int64_t>(diurnal.draw(rng));
        const std::int64_t sec = static_cast<std::int64_t>(rng.bounded(kActivityBinSeconds));
        const UnixTime ts = std::min<UnixTime>(window.start + day * 86400 + bin * kActivityBinSeconds + sec,
                                               window.end);

        // Kind.
        const double kd = rng.uniform();
        TweetKind kind;
        if (kd < config.retweet_share) kind = TweetKind::retweet;
        else if (kd < config.retweet_share + config.reply_share) kind = TweetKind::reply;
        else if (kd < config.retweet_share + config.reply_share + config.quote_share)
            kind = TweetKind::quote;
        else if (kd < config.retweet_share + config.reply_share + config.quote_share +
                          config.mention_share)
            kind = TweetKind::mention;
        else
            kind = TweetKind::original;

        // Target and mentions.
        std::string target;
        std::string mentions;
        if (kind == TweetKind::retweet || kind == TweetKind::reply || kind == TweetKind::quote) {
            target = user_name(draw_target(author));
        }
        if (kind == TweetKind::mention) {
            const int count = 1 + static_cast<int>(rng.bounded(2));
            for (int i = 0; i < count; ++i) {
                if (i > 0) mentions.push_back(';');
                mentions += user_name(draw_target(author));
            }
        } else if (rng.uniform() < 0.15) {
            mentions = user_name(draw_target(author));
        }

        // URLs.
        std::string urls;
        double url_p = 0.35;
        if (kind == TweetKind::retweet) url_p = config.retweet_url_probability;
        else if (kind == TweetKind::reply) url_p = 0.20;
        else if (kind == TweetKind::quote) url_p = 0.50;
        else if (kind == TweetKind::mention) url_p = 0.20;
        if (rng.uniform() < url_p) {
            if (rng.uniform() < 0.10) {
                urls = std::string("https://") +
                       kUnmappedDomains[rng.bounded(std::size(kUnmappedDomains))] + "/p/1";
            } else {
                const int c = pick_category(leaning);
                const auto& domains = kCategoryDomains[c];
                urls = std::string("https://www.") + domains[rng.bounded(domains.size())] +
                       "/story";
            }
        }

        // Hashtags.
        std::string tags;
        const double tc = rng.uniform();
        int tag_count = tc < 0.45 ? 0 : tc < 0.75 ? 1 : tc < 0.90 ? 2 : 3;
        for (int t = 0; t < tag_count; ++t) {
            std::string tag;
            if (rng.uniform() < 0.45 && leaning != 2) {
                const bool camp_t = leaning == 0 ? rng.uniform() < 0.85 : rng.uniform() < 0.15;
                if (camp_t)
                    tag = kSeedTagsT[rng.bounded(std::size(kSeedTagsT))];
                else
                    tag = kSeedTagsC[rng.bounded(std::size(kSeedTagsC))];
                if (rng.uniform() < 0.30) {
                    tag += ';';
                    tag += camp_t ? kCompanionT : kCompanionC;
                }
            } else {
                tag = kNeutralTags[rng.bounded(std::size(kNeutralTags))];
            }
            if (!tags.empty()) tags.push_back(';');
            tags += tag;
        }

        // Client.
        const char* client = rng.uniform() < 0.77
                                 ? kOfficialClients[rng.bounded(std::size(kOfficialClients))]
                                 : kUnofficialClients[rng.bounded(std::size(kUnofficialClients))];

        char idbuf[24];
        std::snprintf(idbuf, sizeof idbuf, "t%09zu", rec);
        previous_id = idbuf;

        fields[0] = idbuf;
        fields[1] = user_name(author);
        fields[2] = format_iso8601_utc(ts);
        fields[3] = std::string(tweet_kind_token(kind));
        fields[4] = target;
        fields[5] = mentions;
        fields[6] = urls;
        fields[7] = tags;
        fields[8] = client;
        line = join_csv_line(fields);
        out << line << '\n';
        ++result.lines_written;
        ++result.valid_tweets;
    }
    if (!out) throw IoError("failed while writing: " + result.corpus_path);
    return result;
}

}  // namespace cfx
