// campaign-forensics: sampled group-degree statistics and pairwise KS tests.
// SPDX-License-Identifier: MIT
//
// For each category network, group degree vectors are compared on an equal
// footing by drawing, per realization, as many group members (without
// replacement) as the network has seed-status members, then averaging the
// realization means.  The seed-status group itself needs no sampling — its
// exact mean is used with a zero standard error.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cfx/corpus/tables.hpp"
#include "cfx/graph/netbuild.hpp"
#include "cfx/stats/ks.hpp"

namespace cfx {

/// Per-group mean-degree vector across the category networks.
struct DegreeSampleVector {
    AccountStatus group = AccountStatus::not_verified;
    Direction direction = Direction::out;
    std::size_t realizations = 0;
    std::vector<double> values;             ///< one mean per category network
    std::vector<double> stderrs;            ///< standard error of the realization means
    std::vector<std::size_t> sample_sizes;  ///< per-network draw count (= seed-group size)
};

inline constexpr std::size_t kDefaultDegreeRealizations = 1000;

/// Sample mean degrees for `group` across `nets`.  Throws a validation error
/// naming the first network whose group population is smaller than the
/// required sample size.  Deterministic for a fixed seed.
DegreeSampleVector sample_group_degrees(const std::array<Digraph, kNewsCategoryCount>& nets,
                                        AccountStatus group, Direction direction,
                                        std::size_t realizations, std::uint64_t seed);

/// Pairwise two-sample KS over the five per-group vectors; symmetric, with a
/// trivially non-rejecting diagonal.
struct KsMatrix {
    std::array<std::array<KsResult, kAccountStatusCount>, kAccountStatusCount> cells;
};
KsMatrix pairwise_ks_heatmap(const std::array<DegreeSampleVector, kAccountStatusCount>& vectors,
                             double alpha);

}  // namespace cfx
