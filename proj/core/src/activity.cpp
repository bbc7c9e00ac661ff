// campaign-forensics: activity binning.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/activity.hpp"

#include "cfx/util/error.hpp"
#include "cfx/util/time.hpp"

namespace cfx {

std::vector<double> bin_activity(const Corpus& corpus, const std::vector<char>& member_user,
                                 bool official_only, const ClientRegistry* registry) {
    if (member_user.size() != corpus.users.size())
        throw ValidationError("membership flags do not match the corpus user table");
    if (official_only && registry == nullptr)
        throw ValidationError("official-only binning requires a client registry");

    std::vector<double> bins(
        static_cast<std::size_t>(corpus.window.bin_count(kActivityBinSeconds)), 0.0);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!member_user[corpus.author[i]]) continue;
        if (official_only && !registry->is_official(corpus.clients.str(corpus.client[i])))
            continue;
        bins[corpus.window.bin_of(corpus.timestamp[i], kActivityBinSeconds)] += 1.0;
    }
    return bins;
}

}  // namespace cfx
