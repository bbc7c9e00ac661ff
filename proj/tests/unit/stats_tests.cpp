// campaign-forensics: unit tests for the statistics layer (quantiles,
// special functions, KS test, OLS, STL decomposition).
// SPDX-License-Identifier: MIT
#include <cmath>
#include <numeric>
#include <vector>

#include "cfx/stats/ks.hpp"
#include "cfx/stats/ols.hpp"
#include "cfx/stats/quantile.hpp"
#include "cfx/stats/special.hpp"
#include "cfx/stats/stl.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/rng.hpp"
#include "doctest.h"

namespace {

double var_of(const std::vector<double>& v) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("type-7 quantiles interpolate order statistics") {
    const std::vector<double> v{1, 2, 3, 4};
    CHECK(cfx::quantile_type7(v, 0.0) == 1.0);
    CHECK(cfx::quantile_type7(v, 1.0) == 4.0);
    CHECK(cfx::quantile_type7(v, 0.25) == doctest::Approx(1.75));
    CHECK(cfx::quantile_type7(v, 0.5) == doctest::Approx(2.5));

    // The classification fixture: positive scores {1,1,2,2,3,3,100}.
    const std::vector<double> s{1, 1, 2, 2, 3, 3, 100};
    CHECK(cfx::quantile_type7(s, 0.25) == doctest::Approx(1.5));
    CHECK(cfx::quantile_type7(s, 0.75) == doctest::Approx(3.0));

    const cfx::Quartiles q = cfx::quartiles({100, 1, 3, 2, 1, 2, 3});
    CHECK(q.q1 == doctest::Approx(1.5));
    CHECK(q.q3 == doctest::Approx(3.0));
    CHECK(q.iqr == doctest::Approx(1.5));
    CHECK_THROWS_AS(cfx::quartiles({}), cfx::ValidationError);
}

TEST_CASE("incomplete beta matches closed forms") {
    // I_x(1, b) = 1 - (1-x)^b.
    for (double x : {0.1, 0.5, 0.9}) {
        for (double b : {1.0, 2.0, 7.5}) {
            CHECK(cfx::incomplete_beta(1.0, b, x) ==
                  doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-10));
        }
    }
    // I_x(2, 2) = x^2 (3 - 2x).
    CHECK(cfx::incomplete_beta(2.0, 2.0, 0.25) == doctest::Approx(0.15625).epsilon(1e-10));
    // Symmetry: I_x(a, b) = 1 - I_{1-x}(b, a).
    CHECK(cfx::incomplete_beta(3.5, 1.25, 0.3) ==
          doctest::Approx(1.0 - cfx::incomplete_beta(1.25, 3.5, 0.7)).epsilon(1e-10));
    CHECK(cfx::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(cfx::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("student t two-sided p-values") {
    CHECK(cfx::student_t_two_sided_p(0.0, 10.0) == doctest::Approx(1.0));
    // df = 1 is a Cauchy: P(|T| >= 1) = 1/2.
    CHECK(cfx::student_t_two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
    // Reference value (R: 2*pt(2, 10, lower.tail=FALSE)).
    CHECK(cfx::student_t_two_sided_p(2.0, 10.0) == doctest::Approx(0.07338803).epsilon(1e-6));
    CHECK(cfx::student_t_two_sided_p(-2.0, 10.0) ==
          doctest::Approx(cfx::student_t_two_sided_p(2.0, 10.0)).epsilon(1e-12));
    // Monotone decreasing in |t|.
    CHECK(cfx::student_t_two_sided_p(3.0, 10.0) < cfx::student_t_two_sided_p(2.0, 10.0));
}

TEST_CASE("kolmogorov survival matches its defining series") {
    const auto series = [](double lambda) {
        double s = 0.0;
        for (int j = 1; j <= 50; ++j)
            s += ((j % 2) ? 2.0 : -2.0) * std::exp(-2.0 * j * j * lambda * lambda);
        return s;
    };
    for (double lambda : {0.5, 1.0, 1.36, 2.0}) {
        CHECK(cfx::kolmogorov_survival(lambda) == doctest::Approx(series(lambda)).epsilon(1e-12));
    }
    CHECK(cfx::kolmogorov_survival(0.0) == 1.0);
    CHECK(cfx::kolmogorov_survival(-1.0) == 1.0);
    CHECK(cfx::kolmogorov_survival(8.0) == doctest::Approx(0.0));
}

TEST_CASE("ks statistic handles ties and disjoint samples") {
    // Fully separated samples: D = 1, h = n*m, p = 2 / C(6,3).
    const cfx::KsResult sep = cfx::ks_two_sample({1, 2, 3}, {4, 5, 6});
    CHECK(sep.d == 1.0);
    CHECK(sep.exact);
    CHECK(sep.p_value == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(cfx::ks_lattice_statistic({1, 2, 3}, {4, 5, 6}) == 9);

    // Tie groups are consumed whole: pooled point 1 gives |2/3 - 1/3|.
    const cfx::KsResult tied = cfx::ks_two_sample({1, 1, 2}, {1, 2, 2});
    CHECK(tied.d == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(cfx::ks_lattice_statistic({1, 1, 2}, {1, 2, 2}) == 3);
    // Every 3+3 interleaving reaches |i-j| >= 1, so P(H >= 3) = 1.
    CHECK(cfx::ks_exact_p(3, 3, 3) == 1.0);

    // Identical samples: D = 0, p = 1.
    const cfx::KsResult same = cfx::ks_two_sample({5, 6, 7, 8}, {5, 6, 7, 8});
    CHECK(same.d == 0.0);
    CHECK(same.p_value == 1.0);
    CHECK_FALSE(same.reject);

    CHECK_THROWS_AS(cfx::ks_two_sample({}, {1.0}), cfx::ValidationError);
    CHECK_THROWS_AS(cfx::ks_lattice_statistic({1.0}, {}), cfx::ValidationError);
}

TEST_CASE("ks exact p is monotone in the lattice statistic") {
    double prev = 1.1;
    for (std::uint64_t h = 1; h <= 100; h += 9) {
        const double p = cfx::ks_exact_p(h, 10, 10);
        CHECK(p <= prev);
        prev = p;
    }
    CHECK(cfx::ks_exact_p(0, 10, 10) == 1.0);
    CHECK(cfx::ks_exact_p(101, 10, 10) == 0.0);
}

TEST_CASE("ks evaluator switch follows the n*m limit") {
    std::vector<double> x(100), y(100);
    for (int i = 0; i < 100; ++i) {
        x[i] = i;
        y[i] = i + 30;  // shift → moderate D
    }
    const cfx::KsResult exact = cfx::ks_two_sample(x, y);  // 100*100 == default limit
    CHECK(exact.exact);
    const cfx::KsResult asym = cfx::ks_two_sample(x, y, 0.05, 9999);
    CHECK_FALSE(asym.exact);
    CHECK(exact.d == asym.d);
}

TEST_CASE("ks exact and asymptotic p-values disagree noticeably on small samples") {
    // n = m = 10, D = 0.3: the asymptotic formula underestimates the exact
    // permutation p-value by a few percentage points.  Pinned so the
    // evaluator split (exact for n*m <= 10,000) stays justified.
    std::vector<double> x(10), y(10);
    for (int i = 0; i < 10; ++i) {
        x[i] = i;
        y[i] = i + 2.5;
    }
    const std::uint64_t h = cfx::ks_lattice_statistic(x, y);
    CHECK(h == 30);  // D = 0.3
    const double exact = cfx::ks_exact_p(h, 10, 10);
    const double asym = cfx::ks_asymptotic_p(0.3, 10, 10);
    CHECK(exact == doctest::Approx(0.7869297).epsilon(1e-6));  // R: ks.test exact
    CHECK(std::fabs(exact - asym) > 0.01);
}

TEST_CASE("ols recovers exact linear relationships") {
    const std::size_t n = 40;
    std::vector<double> a(n), b(n), y(n);
    cfx::Rng rng(11);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng.normal();
        b[i] = rng.normal();
        y[i] = 2.0 + 3.0 * a[i] - 1.5 * b[i];
    }
    const cfx::OlsFit fit = cfx::ols_fit({a, b}, y);
    REQUIRE(fit.coef.size() == 2);
    CHECK(fit.coef[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.coef[1] == doctest::Approx(-1.5).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.sigma2 == doctest::Approx(0.0));

    // Collinear columns are a numerical error; shape mismatch a validation one.
    CHECK_THROWS_AS(cfx::ols_fit({a, a}, y), cfx::NumericalError);
    std::vector<double> short_y(n - 1);
    CHECK_THROWS_AS(cfx::ols_fit({a, b}, short_y), cfx::ValidationError);
}

TEST_CASE("zscore normalizes and rejects constants") {
    std::vector<double> v{1, 2, 3, 4, 5};
    cfx::zscore(v);
    CHECK(std::accumulate(v.begin(), v.end(), 0.0) == doctest::Approx(0.0));
    CHECK(var_of(v) == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<double> c{3, 3, 3};
    CHECK_THROWS_AS(cfx::zscore(c, "flat"), cfx::NumericalError);
}

TEST_CASE("loess reproduces linear data exactly") {
    std::vector<double> y(51);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = 4.0 - 0.25 * static_cast<double>(i);
    for (int span : {3, 7, 25, 51}) {
        const std::vector<double> sm = cfx::loess_smooth(y, span);
        for (std::size_t i = 0; i < y.size(); ++i)
            CHECK(sm[i] == doctest::Approx(y[i]).epsilon(1e-9));
    }
}

TEST_CASE("stl reconstruction identity holds on arbitrary input") {
    cfx::Rng rng(3);
    std::vector<double> y(5 * 96);
    for (std::size_t t = 0; t < y.size(); ++t)
        y[t] = 10.0 * rng.uniform() + ((t % 17 == 0) ? 40.0 : 0.0);
    const cfx::StlDecomposition d = cfx::stl_decompose(y, 96);
    REQUIRE(d.trend.size() == y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
        CHECK(d.trend[t] + d.seasonal[t] + d.remainder[t] == doctest::Approx(y[t]).epsilon(1e-12));
    }
    CHECK(d.period == 96);
}

TEST_CASE("stl separates a planted periodic component from a trend") {
    const int period = 24;
    const std::size_t n = 20 * period;
    std::vector<double> planted(n), y(n);
    cfx::Rng rng(8);
    for (std::size_t t = 0; t < n; ++t) {
        const double phase = 2.0 * 3.14159265358979323846 * static_cast<double>(t % period) /
                             period;
        planted[t] = 2.5 * std::sin(phase) + 1.0 * std::cos(2.0 * phase);
        y[t] = planted[t] + 0.01 * static_cast<double>(t) + 5.0 + 0.2 * rng.normal();
    }
    const cfx::StlDecomposition d = cfx::stl_decompose(y, period);
    double err = 0.0;
    for (std::size_t t = 0; t < n; ++t)
        err += (d.seasonal[t] - planted[t]) * (d.seasonal[t] - planted[t]);
    err /= static_cast<double>(n);
    CHECK(err / var_of(planted) < 0.05);  // captures >= 95% of seasonal variance
}

TEST_CASE("stl handles degenerate inputs per contract") {
    std::vector<double> zeros(4 * 96, 0.0);
    const cfx::StlDecomposition d = cfx::stl_decompose(zeros, 96);
    for (double s : d.seasonal) CHECK(s == doctest::Approx(0.0));
    for (double r : d.remainder) CHECK(r == doctest::Approx(0.0));

    std::vector<double> too_short(96 + 5, 1.0);
    CHECK_THROWS_AS(cfx::stl_decompose(too_short, 96), cfx::ValidationError);
    CHECK_THROWS_AS(cfx::stl_decompose(zeros, 1), cfx::ValidationError);
    std::vector<double> bad(2 * 96, 1.0);
    bad[17] = std::nan("");
    CHECK_THROWS_AS(cfx::stl_decompose(bad, 96), cfx::NumericalError);

    CHECK(cfx::stl_default_trend_window(96) == 145);
}
