// Special functions used by the exact computations and the statistics
// layer: Lanczos log-gamma, regularized incomplete gamma, standard normal
// density/CDF.

#ifndef COMBWALK_SPECIAL_HPP
#define COMBWALK_SPECIAL_HPP

namespace combwalk {

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Regularized lower incomplete gamma P(a, x); series/continued-fraction.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF via erfc.
double normal_cdf(double x);

}  // namespace combwalk

#endif  // COMBWALK_SPECIAL_HPP
