// campaign-forensics: multi-resolution community detection with stability
// selection, plus community composition profiles.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cfx/analysis/louvain.hpp"
#include "cfx/analysis/stance.hpp"
#include "cfx/graph/digraph.hpp"

namespace cfx {

/// Representative partition at one resolution of the sweep.
struct Partition {
    std::vector<std::uint32_t> assignment;  ///< community per vertex, dense, size-ordered
    double resolution = 1.0;
    double modularity = 0.0;  ///< of the representative run
    double stability = 1.0;   ///< mean pairwise adjusted agreement across runs
};

/// Logarithmic resolution grid (inclusive endpoints).
std::vector<double> resolution_grid(double lo = 0.2, double hi = 3.0, int points = 15);

/// Run `runs` seeded optimizations per resolution; stability is the mean
/// adjusted agreement over all run pairs, and the representative assignment
/// is the run with the highest modularity (ties: lowest run index).
std::vector<Partition> detect(const UndirectedGraph& graph, const std::vector<double>& resolutions,
                              int runs, std::uint64_t seed);

/// Highest stability, ties by higher modularity, then lower resolution.
const Partition& select_partition(const std::vector<Partition>& partitions);

/// Composition of one large community.
struct CommunityProfile {
    std::uint32_t community = 0;
    std::size_t nodes = 0;
    std::size_t ira_nodes = 0;
    std::array<double, kSupportClassCount> class_percent{};  ///< % over classified members
    std::size_t unclassified = 0;
    std::array<double, kAccountStatusCount> status_percent{};  ///< % over community nodes
    double unknown_status_percent = 0.0;
    /// Directed interaction-weight shares between status groups inside the
    /// community, in percent of all internal directed weight; row-major
    /// (kAccountStatusCount+1)² with index kAccountStatusCount = unknown.
    std::vector<double> flow_percent;
};

/// Profiles for every community holding at least `min_share` of the LCC
/// vertices, ordered by community id (= descending size).
std::vector<CommunityProfile> profile_communities(const Partition& partition,
                                                  const UndirectedGraph& lcc,
                                                  const Digraph& source_graph,
                                                  const Classification& classes,
                                                  double min_share = 0.10);

}  // namespace cfx
