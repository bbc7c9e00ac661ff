// campaign-forensics: standardized causal-effect estimation and link
// thresholding for the influence-network figures.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfx/analysis/discover.hpp"

namespace cfx {

/// Pairwise maximal standardized effects.  Entry (source, target) is the
/// largest |standardized OLS coefficient| over the discovered lags of that
/// source in the target's parent set; pairs without a discovered link hold
/// an exact 0.  The diagonal carries auto-effects.
class EffectMatrix {
public:
    EffectMatrix() = default;
    explicit EffectMatrix(std::size_t k) : k_(k), value_(k * k, 0.0), se_(k * k, 0.0), lag_(k * k, 0) {}

    std::size_t size() const { return k_; }
    double value(std::size_t source, std::size_t target) const { return value_[source * k_ + target]; }
    double se(std::size_t source, std::size_t target) const { return se_[source * k_ + target]; }
    int lag(std::size_t source, std::size_t target) const { return lag_[source * k_ + target]; }
    void set(std::size_t source, std::size_t target, double value, double se, int lag) {
        value_[source * k_ + target] = value;
        se_[source * k_ + target] = se;
        lag_[source * k_ + target] = lag;
    }

private:
    std::size_t k_ = 0;
    std::vector<double> value_;
    std::vector<double> se_;
    std::vector<int> lag_;
};

struct EffectConfig {
    int tau_max = 18;              ///< alignment window; must cover every parent lag
    bool bootstrap_stderr = false; ///< replace OLS standard errors by bootstrap ones
    int bootstrap_samples = 200;
    std::uint64_t seed = 0;        ///< bootstrap resampling seed
};

/// OLS of each standardized target on all its standardized parent terms.
/// Series are z-scored with their own full-series moments, so effects are
/// invariant under affine rescaling of any input.
EffectMatrix estimate_effects(const std::vector<std::vector<double>>& series,
                              const DiscoveryResult& discovery, const EffectConfig& config = {});

/// Coverage thresholding: the implied threshold is the largest observed
/// value t such that entries ≥ t sum to at least `coverage` of the pool
/// total; the selected links are the off-diagonal entries ≥ t.  The pool
/// includes the diagonal auto-effects unless `include_diagonal_pool` is
/// false (they dominate the total, and the published selections are only
/// reproduced when they participate).
struct SelectedLink {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    double value = 0.0;
};
struct ThresholdResult {
    std::vector<SelectedLink> links;  ///< value-descending, ties by (source, target)
    double threshold = 0.0;
    double covered_fraction = 0.0;    ///< share of the pool the ≥-threshold entries carry
};
ThresholdResult threshold_links(const EffectMatrix& matrix, double coverage = 0.75,
                                bool include_diagonal_pool = true);

/// DOT rendering: node size follows the auto-effect, edge width the link
/// value; optional per-series fill colors.
void export_causal_graph(const EffectMatrix& matrix, const ThresholdResult& selection,
                         const std::vector<std::string>& names,
                         const std::vector<std::string>* colors, std::ostream& out);

}  // namespace cfx
