// campaign-forensics: plot-ready CSV writers for every analysis product,
// plus the per-status share tables.
// SPDX-License-Identifier: MIT
//
// All writers are deterministic for identical inputs: row order is fixed by
// the data structures (canonical node order, enum order, value-descending
// link order) and numbers are formatted with the round-trip formatter.
// Presentation tables list status rows in the fixed publication order
// not_found, not_verified, suspended, verified, ira.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfx/analysis/activity.hpp"
#include "cfx/analysis/community.hpp"
#include "cfx/analysis/degstats.hpp"
#include "cfx/analysis/effects.hpp"
#include "cfx/analysis/stance.hpp"
#include "cfx/corpus/ingest.hpp"
#include "cfx/graph/netbuild.hpp"
#include "cfx/stats/stl.hpp"

namespace cfx {

/// Status rows in publication order.
inline constexpr std::array<AccountStatus, kAccountStatusCount> kStatusPresentationOrder = {
    AccountStatus::not_found, AccountStatus::not_verified, AccountStatus::suspended,
    AccountStatus::verified, AccountStatus::ira};

/// Human-readable status label ("Not found", ...).
std::string_view account_status_label(AccountStatus status);

// --- network stage -------------------------------------------------------

/// network,n,e,mean_degree,n_seed,seed_mean_out,seed_mean_in
void write_network_summary_csv(const std::vector<std::pair<std::string, DegreeSummary>>& rows,
                               std::ostream& out);

/// direction,status,count,share_percent (one block per breakdown)
void write_top_active_csv(const TopActiveBreakdown& top, std::string_view direction_label,
                          std::ostream& out);

// --- degree statistics ---------------------------------------------------

/// group,direction,network,mean_degree,stderr,sample_size,realizations
void write_degree_samples_csv(const std::vector<DegreeSampleVector>& samples,
                              const std::vector<std::string>& network_labels, std::ostream& out);

/// group_a,group_b,d,p_value,exact,reject
void write_ks_matrix_csv(const KsMatrix& matrix, std::ostream& out);

// --- stance ---------------------------------------------------------------

/// user_id,pro_t,pro_c,score,class — included users in canonical id order.
void write_stance_scores_csv(const StanceProfiles& profiles, const Classification& classes,
                             const Corpus& corpus, std::ostream& out);

/// status,total,strong_t,weak_t,strong_c,weak_c,undecided (percent rows)
void write_class_by_status_csv(const ClassByStatus& table, std::ostream& out);

/// class,share_percent
void write_class_shares_csv(const std::array<double, kSupportClassCount>& shares,
                            std::ostream& out);

// --- community ------------------------------------------------------------

/// resolution,stability,modularity,communities
void write_partition_sweep_csv(const std::vector<Partition>& sweep, std::ostream& out);

/// user_id,community for the selected partition over the LCC.
void write_partition_csv(const Partition& partition, const UndirectedGraph& lcc,
                         const Digraph& source_graph, std::ostream& out);

/// Per large community: size, seed count, class and status composition.
void write_community_profiles_csv(const std::vector<CommunityProfile>& profiles,
                                  std::ostream& out);

// --- causal ---------------------------------------------------------------

/// bin,<group...> wide activity matrix.
void write_activity_csv(const std::vector<ActivitySeries>& series, std::ostream& out);

/// bin,observed,trend,seasonal,remainder for one series.
void write_decomposition_csv(const std::vector<double>& observed, const StlDecomposition& parts,
                             std::ostream& out);

/// bin,<group...> wide residual matrix.
void write_residuals_csv(const std::vector<std::string>& names,
                         const std::vector<std::vector<double>>& residuals, std::ostream& out);

/// target,source,lag,strength — discovered parents.
void write_parents_csv(const DiscoveryResult& discovery, const std::vector<std::string>& names,
                       std::ostream& out);

/// source,target,value,stderr,lag — full matrix in machine form.
void write_effect_matrix_csv(const EffectMatrix& matrix, const std::vector<std::string>& names,
                             std::ostream& out);

/// Publication-shaped matrix: one row per target, one column per source,
/// each cell "value ± stderr" (auto-effect on the diagonal), selected links
/// starred.
void write_effect_table_csv(const EffectMatrix& matrix, const ThresholdResult& selection,
                            const std::vector<std::string>& names, std::ostream& out);

/// source,target,value,threshold,covered_fraction.
void write_selected_links_csv(const ThresholdResult& selection,
                              const std::vector<std::string>& names, std::ostream& out);

// --- per-status share tables ----------------------------------------------

/// Per-status percentage rows over labeled columns (news categories, plus a
/// possible trailing "overall" column).  `row_tweets` holds each status
/// group's denominator for the overall column.
struct StatusShareTable {
    std::vector<std::string> columns;
    std::array<std::vector<double>, kAccountStatusCount> percent{};
    std::array<std::uint64_t, kAccountStatusCount> row_tweets{};
};

/// Share of each status group's mapped-URL tweets per news category; rows
/// sum to 100 for groups with at least one mapped tweet.
StatusShareTable report_category_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                        const CategoryMap& categories);

/// Share of tweets posted through non-official clients, per status and news
/// category, with a trailing overall column across all the group's tweets.
StatusShareTable report_nonofficial_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                           const ClientRegistry& registry,
                                           const CategoryMap& categories);

/// Share of original (non-interaction) tweets, per status and news category,
/// with a trailing overall column across all the group's tweets.
StatusShareTable report_original_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                        const CategoryMap& categories);

/// status,total,<columns...> percent rows in publication order.
void write_status_share_csv(const StatusShareTable& table, std::ostream& out);

// --- ingest ---------------------------------------------------------------

/// metric,value rows for the load statistics.
void write_ingest_report_csv(const IngestReport& report, std::ostream& out);

/// Open `path`, run `writer(stream)`, and close with error checking.
void write_csv_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

}  // namespace cfx
