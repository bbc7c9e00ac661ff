// campaign-forensics: small dense OLS via the normal equations.
// SPDX-License-Identifier: MIT
#include "cfx/stats/ols.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cfx/util/error.hpp"

namespace cfx {
namespace {

/// Solve A·X = B in place for the p×p SPD-ish matrix A and p×p identity B,
/// returning A⁻¹ by Gauss-Jordan elimination with partial pivoting.
std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a) {
    const std::size_t p = a.size();
    std::vector<std::vector<double>> inv(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12)
            throw NumericalError("ols_fit: singular normal equations (collinear regressors)");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
        }
        const double diag = a[col][col];
        for (std::size_t c = 0; c < p; ++c) {
            a[col][c] /= diag;
            inv[col][c] /= diag;
        }
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double factor = a[r][col];
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c < p; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

OlsFit ols_fit(const std::vector<std::vector<double>>& columns, const std::vector<double>& y) {
    const std::size_t n = y.size();
    const std::size_t k = columns.size();
    for (const auto& col : columns)
        if (col.size() != n)
            throw ValidationError("ols_fit: regressor length mismatch");
    if (n < k + 2)
        throw ValidationError("ols_fit: need more observations than coefficients (n=" +
                              std::to_string(n) + ", k=" + std::to_string(k) + ")");

    const std::size_t p = k + 1;  // intercept first
    // Normal equations G = AᵀA, g = Aᵀy over the intercept-augmented design.
    std::vector<std::vector<double>> gram(p, std::vector<double>(p, 0.0));
    std::vector<double> moment(p, 0.0);
    gram[0][0] = static_cast<double>(n);
    for (std::size_t c = 0; c < k; ++c) {
        double sum = 0.0;
        for (double v : columns[c]) sum += v;
        gram[0][c + 1] = gram[c + 1][0] = sum;
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t d = c; d < k; ++d) {
            double dot = 0.0;
            for (std::size_t t = 0; t < n; ++t) dot += columns[c][t] * columns[d][t];
            gram[c + 1][d + 1] = gram[d + 1][c + 1] = dot;
        }
    }
    double ysum = 0.0;
    for (double v : y) ysum += v;
    moment[0] = ysum;
    for (std::size_t c = 0; c < k; ++c) {
        double dot = 0.0;
        for (std::size_t t = 0; t < n; ++t) dot += columns[c][t] * y[t];
        moment[c + 1] = dot;
    }

    const auto gram_inv = invert(gram);
    std::vector<double> beta(p, 0.0);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) beta[r] += gram_inv[r][c] * moment[c];

    // Residual variance and coefficient covariance sigma² · (AᵀA)⁻¹.
    double ssr = 0.0;
    double sst = 0.0;
    const double ymean = ysum / static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) {
        double fitted = beta[0];
        for (std::size_t c = 0; c < k; ++c) fitted += beta[c + 1] * columns[c][t];
        const double r = y[t] - fitted;
        ssr += r * r;
        const double centered = y[t] - ymean;
        sst += centered * centered;
    }
    const double df = static_cast<double>(n - p);
    OlsFit fit;
    fit.intercept = beta[0];
    fit.coef.assign(beta.begin() + 1, beta.end());
    fit.sigma2 = ssr / df;
    fit.r2 = (sst > 0.0) ? 1.0 - ssr / sst : 0.0;
    fit.stderr_.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        const double var = fit.sigma2 * gram_inv[c + 1][c + 1];
        fit.stderr_[c] = var > 0.0 ? std::sqrt(var) : 0.0;
    }
    return fit;
}

void zscore(std::vector<double>& values, const char* label) {
    if (values.empty()) throw ValidationError(std::string("zscore: empty ") + label);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    if (var <= 0.0)
        throw NumericalError(std::string("zscore: constant ") + label);
    const double sd = std::sqrt(var);
    for (double& v : values) v = (v - mean) / sd;
}

}  // namespace cfx
