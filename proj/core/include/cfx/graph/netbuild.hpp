// campaign-forensics: builders for category repost networks and seed ego networks.
// SPDX-License-Identifier: MIT
//
// Edge direction is uniform across all interaction types: an edge points from
// the referenced account to the acting account, i.e. along the flow of
// information.  A repost by u of v's content therefore yields v→u; a mention
// of v by u yields v→u; replies and quotes follow the same rule.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cfx/corpus/ingest.hpp"
#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"
#include "cfx/graph/digraph.hpp"

namespace cfx {

/// Degree direction selector shared by rankings and sampled statistics.
enum class Direction : std::uint8_t { in = 0, out = 1 };

/// Interaction channel for ego networks.
enum class Interaction : std::uint8_t { retweet = 0, mention = 1, reply = 2, quote = 3 };
inline constexpr int kInteractionCount = 4;
const char* interaction_token(Interaction i);

/// Unweighted repost network of one news category: edge v→u for every
/// repost by u of v's content whose first mapped URL falls in `category`.
/// Repeated pairs collapse to one edge; self-reposts are dropped.
Digraph build_category_network(const Corpus& corpus, const ResolvedStatuses& statuses,
                               const CategoryMap& categories, NewsCategory category);

/// All eight category networks from a single tagging pass over the corpus.
std::array<Digraph, kNewsCategoryCount> build_all_category_networks(
    const Corpus& corpus, const ResolvedStatuses& statuses, const CategoryMap& categories);

/// Users flagged as seeds, indexed by corpus user id.
std::vector<char> seed_users_by_status(const Corpus& corpus, const ResolvedStatuses& statuses,
                                       AccountStatus status);

/// Weighted single-interaction ego network: edges with information-flow
/// direction, restricted to pairs with at least one seed endpoint
/// (seed–seed pairs allowed); weight = interaction count.
Digraph build_interaction_ego(const Corpus& corpus, const ResolvedStatuses& statuses,
                              const std::vector<char>& is_seed_user, Interaction interaction);

/// Union of the four interaction networks; per ordered pair the weight is
/// the sum of the four interaction counts.
Digraph aggregate_ego(const std::array<Digraph, kInteractionCount>& parts, const Corpus& corpus,
                      const ResolvedStatuses& statuses, const std::vector<char>& is_seed_user,
                      GraphKind kind = GraphKind::aggregated_ego,
                      const char* label = "aggregated");

/// Expanded seed set: the original seeds plus every suspended account that
/// appears as a node of `aggregated`.
std::vector<char> expanded_seed_users(const Digraph& aggregated, const Corpus& corpus,
                                      const ResolvedStatuses& statuses,
                                      const std::vector<char>& is_seed_user);

/// Aggregated four-interaction network over an expanded seed set.
Digraph build_expanded_ego(const Corpus& corpus, const ResolvedStatuses& statuses,
                           const std::vector<char>& expanded_seeds);

/// Status composition of the n highest-degree non-seed nodes.  Direction
/// "out" ranks accounts the seeds acted upon (their content was reposted,
/// mentioned, …); "in" ranks accounts acting on seed content.
struct TopActiveBreakdown {
    std::size_t ranked = 0;                          ///< actual number of nodes ranked (≤ n)
    std::array<std::size_t, kAccountStatusCount> counts{};  ///< per-status node counts
    std::size_t unknown_count = 0;                   ///< nodes with no status record
    std::array<double, kAccountStatusCount> shares{};       ///< percentages over `ranked`
    double unknown_share = 0.0;
};
TopActiveBreakdown top_active_breakdown(const Digraph& graph, Direction direction,
                                        std::size_t n = 1000);

/// Structural summary mirroring the published network tables: node/edge
/// counts, mean degree E/N, and mean in/out degree of the seed-status group.
struct DegreeSummary {
    std::uint64_t n = 0;
    std::uint64_t e = 0;
    double mean_half_degree = 0.0;  ///< E/N; equals mean in-degree and mean out-degree
    std::uint64_t n_ira = 0;
    double ira_mean_out = 0.0;
    double ira_mean_in = 0.0;
};
DegreeSummary summarize(const Digraph& graph);

}  // namespace cfx
