#pragma once

// Integrals against the one-sided tempered stable Levy measure
//   nu(dz) = e^{-lambda z} z^{-1-beta} dz  on (0, infinity).
// The measure has infinite activity near 0 (power-law kernel) and an
// exponentially damped tail, so every integral here is split into a
// small-z region (series or power substitution), a middle region, and a
// mapped semi-infinite tail.

#include "tsharvest/quadrature.hpp"

namespace tsh {

struct LevyParams {
    double beta;    // stability index, in (0, 2)
    double lambda;  // tempering rate, > 0

    void validate() const;
};

// Effective small-z split point: min(q.series_cutoff, 1e-3 / sigma), so the
// direct evaluation of ln(1+sigma z) - sigma z never sees sigma*z below ~1e-3.
double series_cutoff_for(double sigma, const QuadratureConfig& q);

// I(sigma) = int_0^inf [ln(1+sigma z) - sigma z 1{0<z<=1}] nu(dz).
// The integral entering the persistence threshold Phi and the capacity A.
double phi_integral(double sigma, const LevyParams& lp, const QuadratureConfig& q);

// I'(sigma) = int_0^inf [1/(1+sigma z) - 1{0<z<=1}] e^{-lambda z} z^{-beta} dz.
double sensitivity_integral(double sigma, const LevyParams& lp, const QuadratureConfig& q);

// int_1^inf z nu(dz) = int_1^inf z^{-beta} e^{-lambda z} dz, the drift of the
// compensated process. Agrees with lambda^{beta-1} Gamma(1-beta, lambda).
double tail_mean(const LevyParams& lp, const QuadratureConfig& q);

// int_0^inf z^2 nu(dz) = lambda^{beta-2} Gamma(2-beta), closed form.
double second_moment(const LevyParams& lp);

// int_0^eps z^2 nu(dz) = int_0^eps z^{1-beta} e^{-lambda z} dz.
double truncated_second_moment(double eps, const LevyParams& lp, const QuadratureConfig& q);

// nu([lo, hi)) for 0 < lo <= hi <= inf. lo = 0 is rejected (infinite activity).
double band_mass(double lo, double hi, const LevyParams& lp, const QuadratureConfig& q);

// int_lo^hi z nu(dz). lo = 0 permitted only for beta < 1.
double band_mean(double lo, double hi, const LevyParams& lp, const QuadratureConfig& q);

// int_0^inf (ln(1+sigma z))^2 nu(dz), the angle-bracket density of the
// log-jump martingale.
double log_moment2(double sigma, const LevyParams& lp, const QuadratureConfig& q);

// int_lo^inf ln(1+sigma z) nu(dz), lo > 0; the log-space compensation rate
// used by the truncated log-dynamics scheme.
double log_tail_mean(double lo, double sigma, const LevyParams& lp, const QuadratureConfig& q);

}  // namespace tsh
