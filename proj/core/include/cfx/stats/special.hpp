// campaign-forensics: special functions backing the statistical tests.
// SPDX-License-Identifier: MIT
#pragma once

namespace cfx {

/// Regularized incomplete beta function I_x(a, b), evaluated by the
/// continued-fraction expansion with the modified Lentz algorithm
/// (Press et al., Numerical Recipes §6.4).  a, b > 0; x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student-t statistic with `df` degrees of freedom:
/// P(|T| ≥ |t|) = I_{df/(df+t²)}(df/2, 1/2).
double student_t_two_sided_p(double t, double df);

/// Survival function of the Kolmogorov distribution,
/// Q(λ) = 2 Σ_{j≥1} (−1)^{j−1} exp(−2 j² λ²)   (Kolmogorov 1933).
/// Clamped to [0, 1]; Q(λ≤0) = 1.
double kolmogorov_survival(double lambda);

}  // namespace cfx
