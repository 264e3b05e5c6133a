#include "tsharvest/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsharvest/errors.hpp"

namespace tsh {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this per-step variance the Gaussian correction is sub-ulp noise;
// downgrade to DriftOnly.
constexpr double kGaussFloor = 1e-18;
}  // namespace

JumpScheme build_scheme(const LevyParams& lp, double eps, SmallJumpMode mode,
                        const QuadratureConfig& q) {
    lp.validate();
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("build_scheme requires 0 < eps < 1");

    JumpScheme s;
    s.eps = eps;
    s.small_jump_mode = mode;
    s.band_split = 1.0;
    s.nu_mid = band_mass(eps, s.band_split, lp, q);
    s.nu_tail = band_mass(s.band_split, kInf, lp, q);
    s.drift_correction = -band_mean(eps, 1.0, lp, q);
    s.small_var = truncated_second_moment(eps, lp, q);
    return s;
}

double sample_band_jump(double lo, double hi, const LevyParams& lp, Rng& rng) {
    if (!(lo > 0.0 && lo < hi)) throw std::domain_error("sample_band_jump requires 0 < lo < hi");
    const double beta = lp.beta;
    const double lo_pow = std::pow(lo, -beta);
    const double hi_pow = std::isinf(hi) ? 0.0 : std::pow(hi, -beta);

    for (long long i = 0; i < 1000000; ++i) {
        const double u = rng.uniform();
        const double z = std::pow(lo_pow - u * (lo_pow - hi_pow), -1.0 / beta);
        if (rng.uniform() <= std::exp(-lp.lambda * (z - lo))) return z;
    }
    throw SamplerError("sample_band_jump: tempering acceptance failed within 1e6 iterations");
}

JumpAggregates sample_step_jumps(double dt, const JumpScheme& scheme, const LevyParams& lp,
                                 double sigma, Rng& rng) {
    JumpAggregates agg;
    const long long n_mid = rng.poisson(scheme.nu_mid * dt);
    for (long long i = 0; i < n_mid; ++i) {
        const double z = sample_band_jump(scheme.eps, scheme.band_split, lp, rng);
        agg.sum_z += z;
        if (sigma > 0.0) agg.sum_log1p += std::log1p(sigma * z);
    }
    const long long n_tail = rng.poisson(scheme.nu_tail * dt);
    for (long long i = 0; i < n_tail; ++i) {
        const double z = sample_band_jump(scheme.band_split, kInf, lp, rng);
        agg.sum_z += z;
        if (sigma > 0.0) agg.sum_log1p += std::log1p(sigma * z);
    }
    agg.count = n_mid + n_tail;
    return agg;
}

double sample_increment(double dt, const JumpScheme& scheme, const LevyParams& lp, Rng& rng) {
    if (!(dt > 0.0)) throw std::domain_error("sample_increment requires dt > 0");
    double dl = sample_step_jumps(dt, scheme, lp, 0.0, rng).sum_z + scheme.drift_correction * dt;
    if (scheme.small_jump_mode == SmallJumpMode::GaussianApprox) {
        const double var = scheme.small_var * dt;
        if (var >= kGaussFloor) dl += std::sqrt(var) * rng.normal();
    }
    return dl;
}

}  // namespace tsh
