// campaign-forensics: two-sample Kolmogorov-Smirnov test.
// SPDX-License-Identifier: MIT
//
// The statistic is the sup-distance between the two empirical CDFs evaluated
// at the pooled sample points (right-continuous, tie-aware).  The p-value is
// exact for small samples — P(D ≥ d) under the permutation null, computed by
// counting monotone lattice paths that stay inside the band |i·m − j·n| < h
// (Hodges 1958; the algorithm is the classic one also used by R's psmirnov) —
// and switches to the asymptotic Kolmogorov distribution for large samples.
//
// The exact routine conditions on tie-free pooled samples; with ties it is
// the same conservative approximation R applies (the statistic itself remains
// tie-aware).
#pragma once

#include <cstdint>
#include <vector>

namespace cfx {

struct KsResult {
    double d = 0.0;        ///< sup |F_x - F_y| over pooled points
    double p_value = 1.0;  ///< P(D >= d) under H0
    bool reject = false;   ///< p_value < alpha
    bool exact = false;    ///< true if the path-counting evaluator was used
};

/// Largest product n*m for which the exact evaluator is used by default.
inline constexpr std::uint64_t kKsExactLimit = 10000;

/// Integer lattice statistic h = max over the pooled walk of |i·m − j·n|,
/// where (i, j) are the counts of x / y values consumed after each tie group.
/// D = h / (n·m) exactly.  Inputs need not be sorted.
std::uint64_t ks_lattice_statistic(std::vector<double> x, std::vector<double> y);

/// Exact p-value P(max |i·m − j·n| ≥ h) over all C(n+m, n) interleavings.
/// h is the value returned by ks_lattice_statistic.
double ks_exact_p(std::uint64_t h, std::uint64_t n, std::uint64_t m);

/// Asymptotic p-value Q(d·sqrt(nm/(n+m))) from the Kolmogorov distribution.
double ks_asymptotic_p(double d, std::uint64_t n, std::uint64_t m);

/// Full two-sample test.  Throws ValidationError on an empty sample.
/// The evaluator is exact when n·m ≤ exact_limit, asymptotic otherwise.
KsResult ks_two_sample(const std::vector<double>& x, const std::vector<double>& y,
                       double alpha = 0.05, std::uint64_t exact_limit = kKsExactLimit);

}  // namespace cfx
