// campaign-forensics: group activity time series at 15-minute resolution.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"

namespace cfx {

/// Tweet counts per 15-minute bin over the corpus window for the users
/// flagged in `member_user`.  With `official_only`, tweets posted through
/// clients missing from `registry` are skipped (the policy applied to
/// supporter-class groups; seed-group series count every tweet).
std::vector<double> bin_activity(const Corpus& corpus, const std::vector<char>& member_user,
                                 bool official_only, const ClientRegistry* registry);

/// Named series, as assembled by the pipeline for one causal scenario.
struct ActivitySeries {
    std::string group;
    std::vector<double> bins;
};

}  // namespace cfx
