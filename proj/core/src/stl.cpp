// campaign-forensics: STL decomposition (Cleveland et al. 1990), periodic
// seasonal variant.
// SPDX-License-Identifier: MIT
#include "cfx/stats/stl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfx/util/error.hpp"

namespace cfx {
namespace {

int next_odd(double x) {
    int v = static_cast<int>(std::ceil(x));
    if (v % 2 == 0) ++v;
    return v;
}

/// Centered-window moving average of length q: out[i] = mean(v[i .. i+q)),
/// output length v.size() - q + 1.
std::vector<double> moving_average(const std::vector<double>& v, std::size_t q) {
    std::vector<double> out(v.size() - q + 1);
    double window = 0.0;
    for (std::size_t i = 0; i < q; ++i) window += v[i];
    out[0] = window / static_cast<double>(q);
    for (std::size_t i = 1; i < out.size(); ++i) {
        window += v[i + q - 1] - v[i - 1];
        out[i] = window / static_cast<double>(q);
    }
    return out;
}

/// Bisquare robustness weights from residuals: w = (1 - (|r|/h)²)² with
/// h = 6 · median(|r|), the STL outer-loop prescription.
std::vector<double> bisquare_weights(const std::vector<double>& residual) {
    std::vector<double> absr(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) absr[i] = std::fabs(residual[i]);
    std::vector<double> sorted = absr;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median = (n % 2 == 1)
                              ? sorted[n / 2]
                              : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double h = 6.0 * median;
    std::vector<double> w(residual.size(), 1.0);
    if (h <= 0.0) return w;  // at least half the residuals are exactly zero
    const double h9 = 0.999 * h;
    const double h1 = 0.001 * h;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double r = absr[i];
        if (r <= h1) {
            w[i] = 1.0;
        } else if (r >= h9) {
            w[i] = 0.0;
        } else {
            const double u = r / h;
            const double t = 1.0 - u * u;
            w[i] = t * t;
        }
    }
    return w;
}

}  // namespace

int stl_default_trend_window(int period) { return next_odd(1.5 * period); }

std::vector<double> loess_smooth(const std::vector<double>& y, int span,
                                 const std::vector<double>* robustness) {
    const std::size_t n = y.size();
    if (span < 3 || span % 2 == 0) throw ValidationError("loess_smooth: span must be odd and >= 3");
    if (n == 0) return {};
    const std::size_t q = static_cast<std::size_t>(span);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Window of the q index-nearest points (all points if q >= n).
        std::size_t left = 0, right = n - 1;
        double h;  // distance to the farthest point used, possibly extended
        if (q < n) {
            const std::size_t half = (q - 1) / 2;
            left = (i > half) ? i - half : 0;
            if (left + q > n) left = n - q;
            right = left + q - 1;
            h = static_cast<double>(std::max(i - left, right - i));
        } else {
            h = static_cast<double>(std::max(i, n - 1 - i)) +
                static_cast<double>(q - n) / 2.0;
        }
        if (h <= 0.0) h = 1.0;  // n == 1 window
        const double h9 = 0.999 * h;
        const double h1 = 0.001 * h;
        // Tricube in distance, times robustness; degree-1 weighted fit with
        // x centered on i (avoids cancellation for large indices — the fit
        // is evaluated at x = 0).
        double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
        for (std::size_t j = left; j <= right; ++j) {
            const double xj = static_cast<double>(j) - static_cast<double>(i);
            const double r = std::fabs(xj);
            double w;
            if (r <= h1) {
                w = 1.0;
            } else if (r >= h9) {
                w = 0.0;
            } else {
                const double u = r / h;
                const double c = 1.0 - u * u * u;
                w = c * c * c;
            }
            if (robustness) w *= (*robustness)[j];
            if (w == 0.0) continue;
            sw += w;
            swx += w * xj;
            swy += w * y[j];
            swxx += w * xj * xj;
            swxy += w * xj * y[j];
        }
        if (sw <= 0.0) {
            // Every candidate was robustness-zeroed; fall back to the plain
            // window mean so the smoother stays total.
            double sum = 0.0;
            for (std::size_t j = left; j <= right; ++j) sum += y[j];
            out[i] = sum / static_cast<double>(right - left + 1);
            continue;
        }
        const double denom = sw * swxx - swx * swx;
        // Guard against a degenerate spread (all weight on one point).
        if (denom > 1e-12 * sw * swxx) {
            const double slope = (sw * swxy - swx * swy) / denom;
            out[i] = (swy - slope * swx) / sw;  // fitted value at x = 0
        } else {
            out[i] = swy / sw;
        }
    }
    return out;
}

StlDecomposition stl_decompose(const std::vector<double>& series, int period,
                               const StlConfig& config) {
    const std::size_t n = series.size();
    if (period < 2) throw ValidationError("stl_decompose: period must be >= 2");
    const auto p = static_cast<std::size_t>(period);
    if (n < 2 * p)
        throw ValidationError("stl_decompose: series length " + std::to_string(n) +
                              " shorter than two periods (" + std::to_string(2 * p) + ")");
    for (double v : series)
        if (!std::isfinite(v)) throw NumericalError("stl_decompose: non-finite input value");

    const int trend_span =
        config.trend_window > 0 ? config.trend_window | 1 : stl_default_trend_window(period);
    const int lowpass_span =
        config.lowpass_window > 0 ? config.lowpass_window | 1 : next_odd(period);
    const int inner = std::max(1, config.inner_iterations);
    const int outer = std::max(0, config.outer_iterations);

    std::vector<double> trend(n, 0.0);
    std::vector<double> seasonal(n, 0.0);
    std::vector<double> weights(n, 1.0);
    std::vector<double> detrended(n), extended(n + 2 * p), deseasonalized(n);

    for (int pass = 0; pass <= outer; ++pass) {
        for (int it = 0; it < inner; ++it) {
            // Step 1: detrend.
            for (std::size_t t = 0; t < n; ++t) detrended[t] = series[t] - trend[t];

            // Step 2: cycle-subseries smoothing.  With a periodic seasonal
            // smoother each subseries collapses to its robustness-weighted
            // mean, replicated over the series and one period beyond each
            // end (the extension feeds the low-pass filter below).
            for (std::size_t phase = 0; phase < p; ++phase) {
                double wsum = 0.0, vsum = 0.0;
                double plain_sum = 0.0;
                std::size_t count = 0;
                for (std::size_t t = phase; t < n; t += p) {
                    vsum += weights[t] * detrended[t];
                    wsum += weights[t];
                    plain_sum += detrended[t];
                    ++count;
                }
                const double mean =
                    (wsum > 0.0) ? vsum / wsum : plain_sum / static_cast<double>(count);
                for (std::size_t c = phase; c < n + 2 * p; c += p) extended[c] = mean;
            }

            // Step 3: low-pass filter of the extended cycle-subseries —
            // MA(period) ∘ MA(period) ∘ MA(3), then a degree-1 loess.
            // Lengths: (n+2p) → (n+p+1) → (n+2) → n.
            auto low = moving_average(extended, p);
            low = moving_average(low, p);
            low = moving_average(low, 3);
            low = loess_smooth(low, lowpass_span, nullptr);

            // Step 4: seasonal = smoothed subseries minus its low-pass part
            // (removes any drift the periodic means picked up).
            for (std::size_t t = 0; t < n; ++t) seasonal[t] = extended[t + p] - low[t];

            // Step 5/6: deseasonalize and re-estimate the trend.
            for (std::size_t t = 0; t < n; ++t) deseasonalized[t] = series[t] - seasonal[t];
            trend = loess_smooth(deseasonalized, trend_span, &weights);
        }
        if (pass < outer) {
            std::vector<double> residual(n);
            for (std::size_t t = 0; t < n; ++t)
                residual[t] = series[t] - trend[t] - seasonal[t];
            weights = bisquare_weights(residual);
        }
    }

    StlDecomposition out;
    out.period = period;
    out.trend = std::move(trend);
    out.seasonal = std::move(seasonal);
    out.remainder.resize(n);
    // The remainder is the exact residual, so the reconstruction identity
    // trend + seasonal + remainder == series holds bit-for-bit.
    for (std::size_t t = 0; t < n; ++t)
        out.remainder[t] = series[t] - out.trend[t] - out.seasonal[t];
    return out;
}

}  // namespace cfx
