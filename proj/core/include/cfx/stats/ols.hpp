// campaign-forensics: ordinary least squares on small dense systems.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

namespace cfx {

/// OLS fit of y on k regressors plus an intercept.
struct OlsFit {
    std::vector<double> coef;    ///< k slope coefficients (intercept excluded)
    std::vector<double> stderr_; ///< standard error per slope coefficient
    double intercept = 0.0;
    double sigma2 = 0.0;         ///< residual variance, SSR / (n - k - 1)
    double r2 = 0.0;
};

/// Fit y ≈ a + Σ_c coef[c]·x[c].  `columns` holds k vectors of length n.
/// Requires n > k + 1.  Throws ValidationError on shape errors and
/// NumericalError if the normal equations are singular (collinear columns).
///
/// Solved via the normal equations with partial-pivot Gaussian elimination;
/// the regressor count here is small (lagged parent terms, ≤ ~100) and the
/// inputs are standardized upstream, so the classic approach is accurate.
OlsFit ols_fit(const std::vector<std::vector<double>>& columns, const std::vector<double>& y);

/// In-place z-score: subtract mean, divide by population standard deviation.
/// A constant series (sd = 0) throws NumericalError naming `label`.
void zscore(std::vector<double>& values, const char* label = "series");

}  // namespace cfx
