// campaign-forensics: lag-resolved causal parent discovery by iterative
// partial-correlation filtering.
// SPDX-License-Identifier: MIT
//
// For each target series, every (source, lag) pair correlated with the
// target at level α survives an initial screen; surviving candidates are
// then repeatedly re-tested, conditioning on the strongest other survivors
// with the condition-set size growing 1..max_conds, and dropped whenever the
// conditional-independence p-value reaches α.  A candidate's strength is the
// smallest |partial correlation| observed across rounds, which orders the
// conditioning sets deterministically.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfx {

struct LaggedLink {
    std::uint32_t source = 0;
    int lag = 1;  ///< positive: source leads target by `lag` bins
    friend bool operator==(const LaggedLink&, const LaggedLink&) = default;
};

struct ParentSet {
    std::uint32_t target = 0;
    std::vector<LaggedLink> parents;   ///< sorted by (source, lag)
    std::vector<double> strength;      ///< min |partial corr| per parent, parallel array
    bool has(std::uint32_t source, int lag) const {
        for (const LaggedLink& p : parents)
            if (p.source == source && p.lag == lag) return true;
        return false;
    }
};

struct DiscoveryConfig {
    int tau_max = 18;
    double alpha = 0.05;
    int max_conds = 3;
};

struct DiscoveryResult {
    std::vector<ParentSet> parents;   ///< one per series, including excluded ones (empty)
    std::vector<char> excluded;       ///< constant series, skipped with a warning
    std::vector<std::string> warnings;
};

/// All series must share one length ≥ tau_max + max_conds + 4.  Non-finite
/// values raise a numerical error; constant series are excluded (as target
/// and as source) with a warning.
DiscoveryResult discover_parents(const std::vector<std::vector<double>>& series,
                                 const DiscoveryConfig& config = {});

/// Pearson correlation of two equal-length views (population moments).
double pearson(const double* x, const double* y, std::size_t n);

/// Partial correlation of x and y given `conds` (each a view of length n),
/// from the precision matrix of [x, y, conds…].
double partial_correlation(const double* x, const double* y,
                           const std::vector<const double*>& conds, std::size_t n);

/// Two-sided p-value for a (partial) correlation r with the given residual
/// degrees of freedom, via the exact t distribution.
double correlation_p_value(double r, std::int64_t df);

}  // namespace cfx
