#pragma once

// Sampling of increments of the compensated one-sided tempered stable
// process. Jumps above a truncation level eps are simulated exactly as a
// compound Poisson process (split into a mid band [eps, 1) and the tail
// [1, inf)); jumps below eps are replaced by their mean, which cancels the
// matching part of the (0,1] compensator and leaves the deterministic rate
// -int_eps^1 z nu(dz), optionally plus a Gaussian term restoring the
// truncated small-jump variance (Asmussen-Rosinski).

#include "tsharvest/levy.hpp"
#include "tsharvest/rng.hpp"

namespace tsh {

enum class SmallJumpMode { DriftOnly, GaussianApprox };

struct JumpScheme {
    double eps = 1e-3;
    SmallJumpMode small_jump_mode = SmallJumpMode::GaussianApprox;
    double band_split = 1.0;
    double nu_mid = 0.0;            // nu([eps, band_split))
    double nu_tail = 0.0;           // nu([band_split, inf))
    double drift_correction = 0.0;  // -int_eps^1 z nu(dz), per unit time
    double small_var = 0.0;         // int_0^eps z^2 nu(dz), per unit time
};

JumpScheme build_scheme(const LevyParams& lp, double eps, SmallJumpMode mode,
                        const QuadratureConfig& q);

// One jump size from the density proportional to e^{-lambda z} z^{-1-beta}
// on [lo, hi), hi possibly infinite: inverse-transform sampling of the
// truncated Pareto proposal, thinned by the tempering factor
// e^{-lambda (z - lo)}.
double sample_band_jump(double lo, double hi, const LevyParams& lp, Rng& rng);

// Compound-Poisson jumps of one time step, reported as the aggregates both
// integration schemes need: sum of z and sum of ln(1 + sigma z).
struct JumpAggregates {
    double sum_z = 0.0;
    double sum_log1p = 0.0;
    long long count = 0;
};

JumpAggregates sample_step_jumps(double dt, const JumpScheme& scheme, const LevyParams& lp,
                                 double sigma, Rng& rng);

// Full increment dL over one step: jumps + drift correction + (in
// GaussianApprox mode) the small-jump Gaussian. E[dL] = dt * tail_mean,
// Var[dL] ~= dt * second_moment.
double sample_increment(double dt, const JumpScheme& scheme, const LevyParams& lp, Rng& rng);

}  // namespace tsh
