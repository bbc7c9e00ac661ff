// campaign-forensics: effect regression, coverage thresholding, DOT export.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/effects.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cfx/stats/ols.hpp"
#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/rng.hpp"

namespace cfx {

EffectMatrix estimate_effects(const std::vector<std::vector<double>>& series,
                              const DiscoveryResult& discovery, const EffectConfig& config) {
    const std::size_t k = series.size();
    if (discovery.parents.size() != k)
        throw ValidationError("parent sets do not match the series set");
    EffectMatrix matrix(k);
    if (k == 0) return matrix;
    const std::size_t n = series[0].size();
    if (static_cast<std::size_t>(config.tau_max) >= n)
        throw ValidationError("tau_max exceeds the series length");

    // z-score with full-series population moments (affine invariance).
    std::vector<std::vector<double>> z(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (discovery.excluded[i]) continue;
        if (series[i].size() != n) throw ValidationError("series lengths differ");
        z[i] = zscore(series[i], "series " + std::to_string(i));
    }

    const std::size_t n_aligned = n - static_cast<std::size_t>(config.tau_max);
    const auto view = [&](std::uint32_t i, int lag) {
        return z[i].data() + (config.tau_max - lag);
    };

    for (std::size_t target = 0; target < k; ++target) {
        const ParentSet& ps = discovery.parents[target];
        if (discovery.excluded[target] || ps.parents.empty()) continue;
        for (const LaggedLink& p : ps.parents)
            if (p.lag > config.tau_max)
                throw ValidationError("parent lag exceeds tau_max in effect estimation");

        std::vector<std::vector<double>> columns;
        columns.reserve(ps.parents.size());
        for (const LaggedLink& p : ps.parents) {
            const double* v = view(p.source, p.lag);
            columns.emplace_back(v, v + n_aligned);
        }
        std::vector<double> y(view(static_cast<std::uint32_t>(target), 0),
                              view(static_cast<std::uint32_t>(target), 0) + n_aligned);
        const OlsFit fit = ols_fit(columns, y);

        std::vector<double> se = fit.stderr_;
        if (config.bootstrap_stderr && config.bootstrap_samples > 1) {
            // Case-resampling bootstrap over aligned time indices.
            Rng rng = Rng::derive(config.seed, 0x626f6f74ull ^ target);
            std::vector<std::vector<double>> bcoef(ps.parents.size());
            std::vector<std::vector<double>> bcols(columns.size(),
                                                   std::vector<double>(n_aligned));
            std::vector<double> by(n_aligned);
            for (int b = 0; b < config.bootstrap_samples; ++b) {
                for (std::size_t t = 0; t < n_aligned; ++t) {
                    const std::size_t pick = static_cast<std::size_t>(rng.bounded(n_aligned));
                    for (std::size_t c = 0; c < columns.size(); ++c)
                        bcols[c][t] = columns[c][pick];
                    by[t] = y[pick];
                }
                const OlsFit bfit = ols_fit(bcols, by);
                for (std::size_t c = 0; c < bfit.coef.size(); ++c)
                    bcoef[c].push_back(bfit.coef[c]);
            }
            for (std::size_t c = 0; c < bcoef.size(); ++c) {
                double mean = 0.0;
                for (double v : bcoef[c]) mean += v;
                mean /= static_cast<double>(bcoef[c].size());
                double var = 0.0;
                for (double v : bcoef[c]) var += (v - mean) * (v - mean);
                var /= static_cast<double>(bcoef[c].size() - 1);
                se[c] = std::sqrt(var);
            }
        }

        // Reduce per-lag coefficients to the maximal |effect| per source.
        for (std::size_t pi = 0; pi < ps.parents.size(); ++pi) {
            const LaggedLink& p = ps.parents[pi];
            const double coef = std::fabs(fit.coef[pi]);
            if (coef > matrix.value(p.source, target)) {
                matrix.set(p.source, target, coef, se[pi], p.lag);
            }
        }
    }
    return matrix;
}

ThresholdResult threshold_links(const EffectMatrix& matrix, double coverage,
                                bool include_diagonal_pool) {
    if (!(coverage > 0.0 && coverage <= 1.0))
        throw ValidationError("coverage must lie in (0, 1]");
    const std::size_t k = matrix.size();

    std::vector<double> pool;
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j && !include_diagonal_pool) continue;
            const double v = matrix.value(i, j);
            if (v > 0.0) {
                pool.push_back(v);
                total += v;
            }
        }
    }

    ThresholdResult result;
    if (pool.empty() || total <= 0.0) return result;

    // Largest observed value whose ≥-cohort reaches the coverage target.
    std::sort(pool.begin(), pool.end(), std::greater<>());
    const double target = coverage * total;
    double cum = 0.0;
    double threshold = pool.back();
    for (std::size_t i = 0; i < pool.size();) {
        std::size_t j = i;
        while (j < pool.size() && pool[j] == pool[i]) {
            cum += pool[j];
            ++j;
        }
        if (cum >= target) {
            threshold = pool[i];
            break;
        }
        i = j;
    }
    result.threshold = threshold;
    result.covered_fraction = cum / total;

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && matrix.value(i, j) >= threshold)
                result.links.push_back({static_cast<std::uint32_t>(i),
                                        static_cast<std::uint32_t>(j), matrix.value(i, j)});
    std::sort(result.links.begin(), result.links.end(),
              [](const SelectedLink& a, const SelectedLink& b) {
                  if (a.value != b.value) return a.value > b.value;
                  if (a.source != b.source) return a.source < b.source;
                  return a.target < b.target;
              });
    return result;
}

void export_causal_graph(const EffectMatrix& matrix, const ThresholdResult& selection,
                         const std::vector<std::string>& names,
                         const std::vector<std::string>* colors, std::ostream& out) {
    if (names.size() != matrix.size())
        throw ValidationError("name list does not match the effect matrix");
    out << "digraph \"influence\" {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white, fixedsize=true];\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double auto_effect = matrix.value(i, i);
        out << "  \"" << names[i] << "\" [width=" << format_fixed(0.7 + 1.5 * auto_effect, 2)
            << ", label=\"" << names[i] << "\\n" << format_fixed(auto_effect, 2) << "\"";
        if (colors != nullptr && !(*colors)[i].empty())
            out << ", fillcolor=\"" << (*colors)[i] << "\"";
        out << "];\n";
    }
    for (const SelectedLink& link : selection.links) {
        out << "  \"" << names[link.source] << "\" -> \"" << names[link.target]
            << "\" [penwidth=" << format_fixed(0.5 + 8.0 * link.value, 2) << ", label=\""
            << format_fixed(link.value, 2) << "\"];\n";
    }
    out << "}\n";
}

}  // namespace cfx
