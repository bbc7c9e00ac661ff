// campaign-forensics: iterative partial-correlation parent filtering.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/discover.hpp"

#include <algorithm>
#include <cmath>

#include "cfx/stats/special.hpp"
#include "cfx/util/error.hpp"

namespace cfx {

double pearson(const double* x, const double* y, std::size_t n) {
    double mx = 0.0, my = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        mx += x[t];
        my += y[t];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double dx = x[t] - mx;
        const double dy = y[t] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    const double denom = std::sqrt(sxx * syy);
    if (denom <= 0.0) return 0.0;
    double r = sxy / denom;
    return std::clamp(r, -1.0, 1.0);
}

double partial_correlation(const double* x, const double* y,
                           const std::vector<const double*>& conds, std::size_t n) {
    if (conds.empty()) return pearson(x, y, n);

    const std::size_t k = conds.size() + 2;
    std::vector<const double*> vars;
    vars.reserve(k);
    vars.push_back(x);
    vars.push_back(y);
    for (const double* c : conds) vars.push_back(c);

    // Population covariance matrix of the stacked variables.
    std::vector<double> mean(k, 0.0);
    for (std::size_t v = 0; v < k; ++v) {
        for (std::size_t t = 0; t < n; ++t) mean[v] += vars[v][t];
        mean[v] /= static_cast<double>(n);
    }
    std::vector<double> cov(k * k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            double s = 0.0;
            for (std::size_t t = 0; t < n; ++t)
                s += (vars[a][t] - mean[a]) * (vars[b][t] - mean[b]);
            s /= static_cast<double>(n);
            cov[a * k + b] = s;
            cov[b * k + a] = s;
        }
    }

    // Invert by Gauss–Jordan with partial pivoting; the partial correlation
    // falls out of the precision matrix.
    std::vector<double> inv(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(cov[r * k + col]) > std::fabs(cov[pivot * k + col])) pivot = r;
        if (std::fabs(cov[pivot * k + col]) < 1e-12)
            throw NumericalError("singular covariance in partial-correlation test");
        if (pivot != col)
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(cov[pivot * k + j], cov[col * k + j]);
                std::swap(inv[pivot * k + j], inv[col * k + j]);
            }
        const double d = cov[col * k + col];
        for (std::size_t j = 0; j < k; ++j) {
            cov[col * k + j] /= d;
            inv[col * k + j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = cov[r * k + col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                cov[r * k + j] -= f * cov[col * k + j];
                inv[r * k + j] -= f * inv[col * k + j];
            }
        }
    }
    const double pxx = inv[0 * k + 0];
    const double pyy = inv[1 * k + 1];
    const double pxy = inv[0 * k + 1];
    const double denom = std::sqrt(pxx * pyy);
    if (!(denom > 0.0)) return 0.0;
    return std::clamp(-pxy / denom, -1.0, 1.0);
}

double correlation_p_value(double r, std::int64_t df) {
    if (df < 1) return 1.0;
    const double r2 = std::min(r * r, 1.0);
    if (r2 >= 1.0) return 0.0;
    const double t = std::fabs(r) * std::sqrt(static_cast<double>(df) / (1.0 - r2));
    return student_t_two_sided_p(t, static_cast<double>(df));
}

namespace {

struct Candidate {
    LaggedLink link;
    double strength = 0.0;  ///< min |(partial) correlation| across rounds so far
};

/// Strength-descending order with a total deterministic tie-break.
void sort_candidates(std::vector<Candidate>& cands) {
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.strength != b.strength) return a.strength > b.strength;
        if (a.link.source != b.link.source) return a.link.source < b.link.source;
        return a.link.lag < b.link.lag;
    });
}

}  // namespace

DiscoveryResult discover_parents(const std::vector<std::vector<double>>& series,
                                 const DiscoveryConfig& config) {
    const std::size_t num_series = series.size();
    if (num_series == 0) throw ValidationError("no series given to discover_parents");
    const std::size_t n = series[0].size();
    for (const auto& s : series)
        if (s.size() != n) throw ValidationError("series lengths differ");
    if (config.tau_max < 1) throw ValidationError("tau_max must be positive");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw ValidationError("alpha must lie in (0, 1)");
    if (config.max_conds < 0) throw ValidationError("max_conds must be non-negative");
    const std::int64_t n_eff = static_cast<std::int64_t>(n) - config.tau_max;
    if (n_eff < config.max_conds + 4)
        throw ValidationError("series too short for the requested lag window");

    DiscoveryResult result;
    result.parents.resize(num_series);
    result.excluded.assign(num_series, 0);

    // Validate and z-score (population moments); constants are excluded.
    std::vector<std::vector<double>> z(num_series);
    for (std::size_t i = 0; i < num_series; ++i) {
        result.parents[i].target = static_cast<std::uint32_t>(i);
        double mean = 0.0;
        for (double v : series[i]) {
            if (!std::isfinite(v)) throw NumericalError("non-finite value in input series");
            mean += v;
        }
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : series[i]) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);
        if (var <= 0.0) {
            result.excluded[i] = 1;
            result.warnings.push_back("series " + std::to_string(i) +
                                      " is constant; excluded from discovery");
            continue;
        }
        const double sd = std::sqrt(var);
        z[i].resize(n);
        for (std::size_t t = 0; t < n; ++t) z[i][t] = (series[i][t] - mean) / sd;
    }

    // Aligned view of series i at lag τ: samples t = tau_max..n-1 shifted by τ.
    const auto view = [&](std::uint32_t i, int lag) {
        return z[i].data() + (config.tau_max - lag);
    };
    const std::size_t n_aligned = static_cast<std::size_t>(n_eff);

    for (std::uint32_t target = 0; target < num_series; ++target) {
        if (result.excluded[target]) continue;
        const double* y = view(target, 0);

        // Screening: every lagged candidate marginally dependent at level α.
        std::vector<Candidate> cands;
        for (std::uint32_t src = 0; src < num_series; ++src) {
            if (result.excluded[src]) continue;
            for (int lag = 1; lag <= config.tau_max; ++lag) {
                const double r = pearson(view(src, lag), y, n_aligned);
                if (correlation_p_value(r, n_eff - 2) < config.alpha)
                    cands.push_back({LaggedLink{src, lag}, std::fabs(r)});
            }
        }
        sort_candidates(cands);

        // Iterative filtering with growing condition sets.  Removals apply
        // at the end of each round so every test in a round sees the same
        // survivor list ("stable" variant).
        for (int s = 1; s <= config.max_conds && cands.size() > 1; ++s) {
            std::vector<char> keep(cands.size(), 1);
            bool tested_any = false;
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                // Condition on the strongest `s` other survivors.
                std::vector<const double*> conds;
                for (std::size_t cj = 0; cj < cands.size() && conds.size() < static_cast<std::size_t>(s); ++cj) {
                    if (cj == ci) continue;
                    conds.push_back(view(cands[cj].link.source, cands[cj].link.lag));
                }
                if (conds.empty()) continue;
                tested_any = true;
                const double* x = view(cands[ci].link.source, cands[ci].link.lag);
                const double pc = partial_correlation(x, y, conds, n_aligned);
                const std::int64_t df = n_eff - 2 - static_cast<std::int64_t>(conds.size());
                if (correlation_p_value(pc, df) >= config.alpha) {
                    keep[ci] = 0;
                } else {
                    cands[ci].strength = std::min(cands[ci].strength, std::fabs(pc));
                }
            }
            std::vector<Candidate> next;
            next.reserve(cands.size());
            for (std::size_t ci = 0; ci < cands.size(); ++ci)
                if (keep[ci]) next.push_back(cands[ci]);
            cands.swap(next);
            sort_candidates(cands);
            if (!tested_any) break;
        }

        ParentSet& ps = result.parents[target];
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.link.source != b.link.source) return a.link.source < b.link.source;
            return a.link.lag < b.link.lag;
        });
        for (const Candidate& c : cands) {
            ps.parents.push_back(c.link);
            ps.strength.push_back(c.strength);
        }
    }
    return result;
}

}  // namespace cfx
