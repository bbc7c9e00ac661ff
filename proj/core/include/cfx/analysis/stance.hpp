// campaign-forensics: per-tweet stance labels, user support scores, and
// IQR-based supporter classes.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"

namespace cfx {

enum class StanceLabel : std::uint8_t { pro_t = 0, pro_c = 1, neutral = 2 };

enum class SupportClass : std::uint8_t {
    strong_t = 0,
    weak_t = 1,
    strong_c = 2,
    weak_c = 3,
    undecided = 4,
};
inline constexpr int kSupportClassCount = 5;
std::string_view support_class_token(SupportClass c);

/// Hashtag-lexicon vote: pro_t when pro-T hits exceed pro-C hits, pro_c when
/// reversed, neutral on tie or no hits.  Hits count hashtag instances.
StanceLabel label_tweet(const Corpus& corpus, std::size_t record, const StanceLexicon& lexicon);

/// One-round co-occurrence expansion: an unlabeled hashtag appearing in at
/// least `min_count` records together with seed hashtags of exactly one camp
/// (and in none with the other camp) inherits that camp.
StanceLexicon expand_lexicon(const Corpus& corpus, const StanceLexicon& seeds, int min_count = 10);

/// Per-user pro-T / pro-C tweet counts and score S = N_pro_T − N_pro_C,
/// aggregated over every corpus record, indexed by corpus user id.
struct StanceProfiles {
    std::vector<std::int32_t> pro_t;  ///< per user id
    std::vector<std::int32_t> pro_c;
    std::int64_t score(std::uint32_t user) const {
        return static_cast<std::int64_t>(pro_t[user]) - pro_c[user];
    }
    std::size_t size() const { return pro_t.size(); }
};
StanceProfiles score_users(const Corpus& corpus, const StanceLexicon& lexicon);

enum class ClassScheme : std::uint8_t { per_side = 0, whole_distribution = 1 };

/// Quartile-derived cut points used by the classification, echoed in reports.
struct ClassThresholds {
    ClassScheme scheme = ClassScheme::per_side;
    // per_side: quartiles of {S : S>0} and of {|S| : S<0}; cut = Q3 + 1.5·IQR.
    // whole_distribution: quartiles of all scores; upper and lower cuts.
    bool t_side_defined = false;
    double t_q1 = 0.0, t_q3 = 0.0, t_cut = 0.0;
    bool c_side_defined = false;
    double c_q1 = 0.0, c_q3 = 0.0, c_cut = 0.0;
    std::vector<std::string> warnings;
};

/// Classified population: class per included user (undecided ⇔ S = 0;
/// strong requires S strictly above the cut).
struct Classification {
    std::vector<std::uint8_t> klass;   ///< SupportClass value, 0xff for excluded users
    std::vector<char> included;        ///< which user ids were classified
    ClassThresholds thresholds;
    static constexpr std::uint8_t kExcluded = 0xff;
};

/// Classify `include`d users (all users when null) from their scores.
/// A side with fewer than four users cannot define quartiles: its users are
/// all weak and a warning is recorded.
Classification classify_users(const StanceProfiles& profiles, ClassScheme scheme,
                              const std::vector<char>* include = nullptr);

/// Percentage of each support class within each account-status group
/// (rows normalized to 100; row order fixed by AccountStatus).
struct ClassByStatus {
    std::array<std::array<double, kSupportClassCount>, kAccountStatusCount> percent{};
    std::array<std::size_t, kAccountStatusCount> totals{};
};
ClassByStatus class_by_status(const Classification& classes,
                              const std::vector<std::uint8_t>& status_by_user);

/// Share of each support class over all classified users, in percent.
std::array<double, kSupportClassCount> class_shares(const Classification& classes);

}  // namespace cfx
