// campaign-forensics: type-7 quantiles.
// SPDX-License-Identifier: MIT
#include "cfx/stats/quantile.hpp"

#include <algorithm>
#include <cmath>

#include "cfx/util/error.hpp"

namespace cfx {

double quantile_type7(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw ValidationError("quantile of an empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    // h = (n - 1) p; interpolate between floor(h) and floor(h)+1.
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - std::floor(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

Quartiles quartiles(std::vector<double> values) {
    if (values.empty()) throw ValidationError("quartiles of an empty sample");
    std::sort(values.begin(), values.end());
    Quartiles q;
    q.q1 = quantile_type7(values, 0.25);
    q.q3 = quantile_type7(values, 0.75);
    q.iqr = q.q3 - q.q1;
    return q;
}

}  // namespace cfx
