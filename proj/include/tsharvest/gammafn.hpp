#pragma once

// Complete and incomplete gamma functions, implemented in-repo so the
// closed-form cross-checks have no external special-function dependency.
// Lanczos approximation for Gamma(x); power series and modified-Lentz
// continued fraction for the incomplete functions.

namespace tsh::special {

// Gamma(x) for x > 0.
double gamma_fn(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s), s > 0, x >= 0.
double gamma_p(double s, double x);

// Regularized upper incomplete gamma Q(s,x) = 1 - P(s,x), s > 0, x >= 0.
double gamma_q(double s, double x);

// Lower incomplete gamma(s,x) = int_0^x t^{s-1} e^{-t} dt, s > 0.
double lower_gamma(double s, double x);

// Upper incomplete Gamma(s,x) = int_x^infty t^{s-1} e^{-t} dt.
// Supports any real s when x > 0 (s <= 0 handled by recurrence / E1).
double upper_gamma(double s, double x);

// Exponential integral E1(x) = int_x^infty e^{-t}/t dt = Gamma(0,x), x > 0.
double exp_integral_e1(double x);

// int_0^c z^{s-1} e^{-lambda z} dz = lambda^{-s} * gamma(s, lambda c),
// evaluated in a scaled form that stays stable for small lambda*c.
double partial_moment(double s, double lambda, double c);

}  // namespace tsh::special
