#pragma once

namespace nlicp {

double normal_cdf(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

double chi_squared_sf(double x, double df);

/// CDF of the F distribution with (d1, d2) degrees of freedom.
double f_cdf(double x, double d1, double d2);
double f_sf(double x, double d1, double d2);

/// CDF of Gamma(shape, scale).
double gamma_cdf(double x, double shape, double scale);

/// Survival function of the Kolmogorov distribution,
/// Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2), with the theta-dual
/// series for small t.
double kolmogorov_sf(double t);

double log_binom(int n, int k);

}  // namespace nlicp
