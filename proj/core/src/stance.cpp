// campaign-forensics: stance scoring and supporter classification.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/stance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cfx/stats/quantile.hpp"
#include "cfx/util/error.hpp"

namespace cfx {

std::string_view support_class_token(SupportClass c) {
    static constexpr std::string_view kTokens[kSupportClassCount] = {
        "strong_t", "weak_t", "strong_c", "weak_c", "undecided"};
    return kTokens[static_cast<int>(c)];
}

StanceLabel label_tweet(const Corpus& corpus, std::size_t record, const StanceLexicon& lexicon) {
    int hits_t = 0;
    int hits_c = 0;
    for (std::uint32_t tag : corpus.tags(record)) {
        const auto camp = lexicon.lookup(corpus.hashtags.str(tag));
        if (!camp) continue;
        (*camp == Camp::pro_t ? hits_t : hits_c)++;
    }
    if (hits_t > hits_c) return StanceLabel::pro_t;
    if (hits_c > hits_t) return StanceLabel::pro_c;
    return StanceLabel::neutral;
}

StanceLexicon expand_lexicon(const Corpus& corpus, const StanceLexicon& seeds, int min_count) {
    // Per unlabeled hashtag id: number of records shared with each camp's
    // seed hashtags (records counted once regardless of instance counts).
    std::vector<std::int32_t> with_t(corpus.hashtags.size(), 0);
    std::vector<std::int32_t> with_c(corpus.hashtags.size(), 0);

    std::vector<std::uint32_t> distinct;
    for (std::size_t rec = 0; rec < corpus.size(); ++rec) {
        const auto span = corpus.tags(rec);
        distinct.assign(span.begin(), span.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        bool has_t = false;
        bool has_c = false;
        for (std::uint32_t tag : distinct) {
            const auto camp = seeds.lookup(corpus.hashtags.str(tag));
            if (!camp) continue;
            (*camp == Camp::pro_t ? has_t : has_c) = true;
        }
        if (!has_t && !has_c) continue;
        for (std::uint32_t tag : distinct) {
            if (seeds.lookup(corpus.hashtags.str(tag))) continue;
            if (has_t) ++with_t[tag];
            if (has_c) ++with_c[tag];
        }
    }

    StanceLexicon expanded = seeds;
    // Deterministic adoption order (by hashtag string) for reproducible logs.
    std::map<std::string, Camp> adopted;
    for (std::uint32_t tag = 0; tag < corpus.hashtags.size(); ++tag) {
        if (with_t[tag] >= min_count && with_c[tag] == 0)
            adopted.emplace(std::string(corpus.hashtags.str(tag)), Camp::pro_t);
        else if (with_c[tag] >= min_count && with_t[tag] == 0)
            adopted.emplace(std::string(corpus.hashtags.str(tag)), Camp::pro_c);
    }
    for (const auto& [tag, camp] : adopted) expanded.add(tag, camp);
    return expanded;
}

StanceProfiles score_users(const Corpus& corpus, const StanceLexicon& lexicon) {
    StanceProfiles p;
    p.pro_t.assign(corpus.users.size(), 0);
    p.pro_c.assign(corpus.users.size(), 0);
    for (std::size_t rec = 0; rec < corpus.size(); ++rec) {
        const StanceLabel label = label_tweet(corpus, rec, lexicon);
        if (label == StanceLabel::pro_t)
            ++p.pro_t[corpus.author[rec]];
        else if (label == StanceLabel::pro_c)
            ++p.pro_c[corpus.author[rec]];
    }
    return p;
}

namespace {

/// Q3 + 1.5·IQR over a side's magnitudes; empty optional when the side has
/// fewer than four members.
struct SideCut {
    bool defined = false;
    double q1 = 0.0, q3 = 0.0, cut = 0.0;
};

SideCut side_cut(std::vector<double>& magnitudes) {
    SideCut s;
    if (magnitudes.size() < 4) return s;
    const Quartiles q = quartiles(magnitudes);
    s.defined = true;
    s.q1 = q.q1;
    s.q3 = q.q3;
    s.cut = q.q3 + 1.5 * q.iqr;
    return s;
}

}  // namespace

Classification classify_users(const StanceProfiles& profiles, ClassScheme scheme,
                              const std::vector<char>* include) {
    if (include != nullptr && include->size() != profiles.size())
        throw ValidationError("classification filter does not match the user table");

    Classification out;
    out.klass.assign(profiles.size(), Classification::kExcluded);
    out.included.assign(profiles.size(), 0);
    out.thresholds.scheme = scheme;

    std::vector<std::uint32_t> users;
    for (std::uint32_t u = 0; u < profiles.size(); ++u) {
        if (include == nullptr || (*include)[u]) {
            users.push_back(u);
            out.included[u] = 1;
        }
    }

    auto& th = out.thresholds;
    if (scheme == ClassScheme::per_side) {
        std::vector<double> t_side;
        std::vector<double> c_side;
        for (std::uint32_t u : users) {
            const std::int64_t s = profiles.score(u);
            if (s > 0) t_side.push_back(static_cast<double>(s));
            if (s < 0) c_side.push_back(static_cast<double>(-s));
        }
        const SideCut t = side_cut(t_side);
        const SideCut c = side_cut(c_side);
        th.t_side_defined = t.defined;
        th.t_q1 = t.q1;
        th.t_q3 = t.q3;
        th.t_cut = t.cut;
        th.c_side_defined = c.defined;
        th.c_q1 = c.q1;
        th.c_q3 = c.q3;
        th.c_cut = c.cut;
        if (!t.defined && !t_side.empty())
            th.warnings.push_back("pro-T side has fewer than 4 users; all classified weak");
        if (!c.defined && !c_side.empty())
            th.warnings.push_back("pro-C side has fewer than 4 users; all classified weak");

        for (std::uint32_t u : users) {
            const std::int64_t s = profiles.score(u);
            SupportClass k;
            if (s == 0)
                k = SupportClass::undecided;
            else if (s > 0)
                k = (t.defined && static_cast<double>(s) > t.cut) ? SupportClass::strong_t
                                                                  : SupportClass::weak_t;
            else
                k = (c.defined && static_cast<double>(-s) > c.cut) ? SupportClass::strong_c
                                                                   : SupportClass::weak_c;
            out.klass[u] = static_cast<std::uint8_t>(k);
        }
    } else {
        std::vector<double> all;
        all.reserve(users.size());
        for (std::uint32_t u : users) all.push_back(static_cast<double>(profiles.score(u)));
        double upper = 0.0;
        double lower = 0.0;
        bool defined = all.size() >= 4;
        if (defined) {
            const Quartiles q = quartiles(all);
            th.t_q1 = th.c_q1 = q.q1;
            th.t_q3 = th.c_q3 = q.q3;
            upper = q.q3 + 1.5 * q.iqr();
            lower = q.q1 - 1.5 * q.iqr();
            th.t_cut = upper;
            th.c_cut = lower;
            th.t_side_defined = th.c_side_defined = true;
        } else if (!users.empty()) {
            th.warnings.push_back(
                "fewer than 4 classified users; whole-distribution cuts undefined, all weak");
        }
        for (std::uint32_t u : users) {
            const std::int64_t s = profiles.score(u);
            SupportClass k;
            if (s == 0)
                k = SupportClass::undecided;
            else if (s > 0)
                k = (defined && static_cast<double>(s) > upper) ? SupportClass::strong_t
                                                                : SupportClass::weak_t;
            else
                k = (defined && static_cast<double>(s) < lower) ? SupportClass::strong_c
                                                                : SupportClass::weak_c;
            out.klass[u] = static_cast<std::uint8_t>(k);
        }
    }
    return out;
}

ClassByStatus class_by_status(const Classification& classes,
                              const std::vector<std::uint8_t>& status_by_user) {
    if (status_by_user.size() != classes.klass.size())
        throw ValidationError("status vector does not match the classified user table");
    ClassByStatus table;
    std::array<std::array<std::size_t, kSupportClassCount>, kAccountStatusCount> counts{};
    for (std::uint32_t u = 0; u < classes.klass.size(); ++u) {
        if (!classes.included[u]) continue;
        const std::uint8_t status = status_by_user[u];
        if (status >= kAccountStatusCount) continue;  // unknown accounts have no row
        ++counts[status][classes.klass[u]];
        ++table.totals[status];
    }
    for (int s = 0; s < kAccountStatusCount; ++s) {
        if (table.totals[s] == 0) continue;
        for (int k = 0; k < kSupportClassCount; ++k)
            table.percent[s][k] =
                100.0 * static_cast<double>(counts[s][k]) / static_cast<double>(table.totals[s]);
    }
    return table;
}

std::array<double, kSupportClassCount> class_shares(const Classification& classes) {
    std::array<double, kSupportClassCount> shares{};
    std::array<std::size_t, kSupportClassCount> counts{};
    std::size_t total = 0;
    for (std::uint32_t u = 0; u < classes.klass.size(); ++u) {
        if (!classes.included[u]) continue;
        ++counts[classes.klass[u]];
        ++total;
    }
    if (total > 0)
        for (int k = 0; k < kSupportClassCount; ++k)
            shares[k] = 100.0 * static_cast<double>(counts[k]) / static_cast<double>(total);
    return shares;
}

}  // namespace cfx
