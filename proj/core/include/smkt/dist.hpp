#pragma once

namespace smkt::dist {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double inc_beta(double a, double b, double x);

/// Standard normal CDF.
double std_normal_cdf(double x);

/// Chi-squared CDF with k > 0 degrees of freedom, x >= 0.
double chi2_cdf(double x, double k);

/// F distribution CDF with d1, d2 > 0 degrees of freedom, x >= 0.
double f_cdf(double x, double d1, double d2);

}  // namespace smkt::dist
