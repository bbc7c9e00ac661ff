// campaign-forensics: order-statistics quantiles (linear interpolation).
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

namespace cfx {

/// Quantile by linear interpolation between order statistics — the estimator
/// known as "type 7" in Hyndman & Fan (1996), the default of R and NumPy.
/// `sorted` must be ascending and non-empty; p in [0, 1].
double quantile_type7(const std::vector<double>& sorted, double p);

/// Quartiles and interquartile range of an unsorted sample.
struct Quartiles {
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;  ///< q3 - q1
};

/// Throws ValidationError if values is empty.
Quartiles quartiles(std::vector<double> values);

}  // namespace cfx
