// campaign-forensics: two-sample Kolmogorov-Smirnov test.
// SPDX-License-Identifier: MIT
#include "cfx/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cfx/stats/special.hpp"
#include "cfx/util/error.hpp"

namespace cfx {
namespace {

/// One pass over the pooled sorted samples, consuming tie groups whole.
/// Produces both the floating sup-distance and the equivalent integer
/// lattice statistic h = max |i·m − j·n| (so that d = h / (n·m) exactly
/// when both are evaluated after each tie group).
struct PooledWalk {
    double d = 0.0;
    std::uint64_t h = 0;
};

PooledWalk pooled_walk(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::uint64_t n = xs.size();
    const std::uint64_t m = ys.size();
    PooledWalk out;
    std::size_t ix = 0, iy = 0;
    while (ix < n || iy < m) {
        double v;
        if (ix >= n)
            v = ys[iy];
        else if (iy >= m)
            v = xs[ix];
        else
            v = std::min(xs[ix], ys[iy]);
        while (ix < n && xs[ix] == v) ++ix;
        while (iy < m && ys[iy] == v) ++iy;
        const std::uint64_t e = (ix * m > iy * n) ? ix * m - iy * n : iy * n - ix * m;
        out.h = std::max(out.h, e);
        const double fx = static_cast<double>(ix) / static_cast<double>(n);
        const double fy = static_cast<double>(iy) / static_cast<double>(m);
        out.d = std::max(out.d, std::fabs(fx - fy));
    }
    return out;
}

}  // namespace

std::uint64_t ks_lattice_statistic(std::vector<double> x, std::vector<double> y) {
    if (x.empty() || y.empty())
        throw ValidationError("ks_lattice_statistic: empty sample");
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return pooled_walk(x, y).h;
}

double ks_exact_p(std::uint64_t h, std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw ValidationError("ks_exact_p: empty sample");
    if (h == 0) return 1.0;          // max >= 0 always holds
    if (h > n * m) return 0.0;       // statistic can never exceed n·m
    // P(D < h/(n·m)) by counting monotone lattice paths (0,0) → (a,b) whose
    // every visited point satisfies |i·b' − j·a'| < h, probability-scaled row
    // by row so intermediate values stay in [0, 1] (no binomial overflow).
    // a indexes the smaller sample purely to keep the inner array short.
    std::uint64_t a = n, b = m;
    if (a > b) std::swap(a, b);
    std::vector<long double> u(a + 1);
    for (std::uint64_t i = 0; i <= a; ++i) u[i] = (i * b >= h) ? 0.0L : 1.0L;
    for (std::uint64_t j = 1; j <= b; ++j) {
        const long double w =
            static_cast<long double>(j) / static_cast<long double>(j + a);
        u[0] = (j * a >= h) ? 0.0L : w * u[0];
        for (std::uint64_t i = 1; i <= a; ++i) {
            const std::uint64_t e = (i * b > j * a) ? i * b - j * a : j * a - i * b;
            u[i] = (e >= h) ? 0.0L : w * u[i] + u[i - 1];
        }
    }
    long double p = 1.0L - u[a];
    if (p < 0.0L) p = 0.0L;
    if (p > 1.0L) p = 1.0L;
    return static_cast<double>(p);
}

double ks_asymptotic_p(double d, std::uint64_t n, std::uint64_t m) {
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double lambda = d * std::sqrt(nd * md / (nd + md));
    return kolmogorov_survival(lambda);
}

KsResult ks_two_sample(const std::vector<double>& x, const std::vector<double>& y, double alpha,
                       std::uint64_t exact_limit) {
    if (x.empty() || y.empty()) throw ValidationError("ks_two_sample: empty sample");
    std::vector<double> xs = x;
    std::vector<double> ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const PooledWalk walk = pooled_walk(xs, ys);
    const std::uint64_t n = xs.size();
    const std::uint64_t m = ys.size();
    KsResult result;
    result.d = walk.d;
    result.exact = n * m <= exact_limit;
    result.p_value = result.exact ? ks_exact_p(walk.h, n, m) : ks_asymptotic_p(walk.d, n, m);
    result.reject = result.p_value < alpha;
    return result;
}

}  // namespace cfx
