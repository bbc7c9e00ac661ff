// campaign-forensics: seasonal-trend decomposition by Loess (STL).
// SPDX-License-Identifier: MIT
//
// Faithful port of the decomposition of Cleveland, Cleveland, McRae &
// Terpenning (1990), "STL: A Seasonal-Trend Decomposition Procedure Based on
// Loess", J. Official Statistics 6(1):3-73, in its "periodic seasonal"
// configuration: the cycle-subseries smoother degenerates to a robustness-
// weighted mean per subseries, which suits strictly daily-periodic activity
// profiles.  The inner loop alternates seasonal and trend estimation; the
// outer loop downweights outliers with the bisquare function.
//
// The reconstruction identity trend + seasonal + remainder == input holds
// element-wise by construction (the remainder is defined as the residual).
#pragma once

#include <cstddef>
#include <vector>

namespace cfx {

struct StlConfig {
    int inner_iterations = 2;   ///< seasonal/trend alternations per pass
    int outer_iterations = 1;   ///< robustness re-weighting passes
    int trend_window = 0;       ///< loess span for the trend; 0 = from period
    int lowpass_window = 0;     ///< loess span for the low-pass; 0 = from period
};

struct StlDecomposition {
    std::vector<double> trend;
    std::vector<double> seasonal;
    std::vector<double> remainder;
    int period = 0;
};

/// Default trend span: smallest odd integer ≥ 1.5 · period (the standard STL
/// prescription with a periodic seasonal smoother).
int stl_default_trend_window(int period);

/// Decompose `series` with the given period (observations per cycle).
/// Requires series.size() ≥ 2 · period and period ≥ 2; throws
/// ValidationError otherwise, NumericalError on non-finite input.
StlDecomposition stl_decompose(const std::vector<double>& series, int period,
                               const StlConfig& config = {});

/// Locally-weighted regression smoother used by STL: at every index, fit a
/// degree-1 polynomial over the `span` nearest points with tricube weights
/// (times optional robustness weights), and evaluate at that index.
/// Exposed for tests; span must be odd and ≥ 3.
std::vector<double> loess_smooth(const std::vector<double>& y, int span,
                                 const std::vector<double>* robustness = nullptr);

}  // namespace cfx
