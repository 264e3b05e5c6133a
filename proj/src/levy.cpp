#include "tsharvest/levy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsharvest/errors.hpp"
#include "tsharvest/gammafn.hpp"

namespace tsh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBetaGuard = 1e-3;  // Gamma(2-beta) and z^{1-beta} degrade at the boundary

double kernel(double z, const LevyParams& lp) {
    return std::exp(-lp.lambda * z) * std::pow(z, -1.0 - lp.beta);
}

// Point beyond which the tempering factor dominates; mandatory handoff to
// the mapped semi-infinite integral.
double tempering_split(const LevyParams& lp) {
    return std::max(1.0, 10.0 / lp.lambda);
}

// int_0^c [ln(1+sigma z) - sigma z] nu(dz) by integrating the alternating
// log series term-by-term: sum_{k>=2} (-1)^{k+1} (sigma^k / k) int_0^c
// z^{k-1-beta} e^{-lambda z} dz. Direct evaluation would cancel
// catastrophically against the z^{-1-beta} kernel for sigma*z << 1.
double small_z_series(double sigma, double c, const LevyParams& lp, const QuadratureConfig& q) {
    double sum = 0.0;
    double sig_pow = sigma;  // sigma^{k-1}
    int k = 2;
    for (; k <= 24; ++k) {
        sig_pow *= sigma;
        const double term =
            (k % 2 == 0 ? -1.0 : 1.0) * sig_pow / k * special::partial_moment(k - lp.beta, lp.lambda, c);
        sum += term;
        if (k >= 9) {
            // alternating series with sigma*c < 1: the next term bounds the remainder
            const double next =
                sig_pow * sigma / (k + 1) * special::partial_moment(k + 1 - lp.beta, lp.lambda, c);
            if (next <= std::max(q.abs_tol, q.rel_tol * std::fabs(sum))) return sum;
        }
    }
    return sum;
}

}  // namespace

void LevyParams::validate() const {
    if (!(beta > kBetaGuard && beta < 2.0 - kBetaGuard))
        throw std::domain_error("LevyParams: beta must lie in (0, 2) with 1e-3 margin");
    if (!(lambda > 0.0)) throw std::domain_error("LevyParams: lambda must be positive");
}

double series_cutoff_for(double sigma, const QuadratureConfig& q) {
    if (sigma <= 0.0) return q.series_cutoff;
    return std::min(q.series_cutoff, 1e-3 / sigma);
}

double phi_integral(double sigma, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (sigma < 0.0) throw std::domain_error("phi_integral requires sigma >= 0");
    if (sigma == 0.0) return 0.0;

    const double c = series_cutoff_for(sigma, q);
    double total = small_z_series(sigma, c, lp, q);

    auto inner = [&](double z) { return (std::log1p(sigma * z) - sigma * z) * kernel(z, lp); };
    total += integrate_adaptive(inner, c, 1.0, q).value;

    auto outer = [&](double z) { return std::log1p(sigma * z) * kernel(z, lp); };
    const double zt = tempering_split(lp);
    if (zt > 1.0) total += integrate_adaptive(outer, 1.0, zt, q).value;
    total += integrate_tail(outer, zt, q).value;
    return total;
}

double sensitivity_integral(double sigma, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (sigma < 0.0) throw std::domain_error("sensitivity_integral requires sigma >= 0");

    double total = 0.0;
    if (sigma > 0.0) {
        // (0,1]: 1/(1+sigma z) - 1 = -sigma z/(1+sigma z); the power
        // substitution z = t^{1/(2-beta)} flattens the z^{1-beta} endpoint.
        const double p = 1.0 / (2.0 - lp.beta);
        auto inner = [&](double t) {
            const double z = std::pow(t, p);
            return -sigma * p * std::exp(-lp.lambda * z) / (1.0 + sigma * z);
        };
        total += integrate_adaptive(inner, 0.0, 1.0, q).value;
    }

    auto outer = [&](double z) {
        return std::exp(-lp.lambda * z) * std::pow(z, -lp.beta) / (1.0 + sigma * z);
    };
    const double zt = tempering_split(lp);
    if (zt > 1.0) total += integrate_adaptive(outer, 1.0, zt, q).value;
    total += integrate_tail(outer, zt, q).value;
    return total;
}

double tail_mean(const LevyParams& lp, const QuadratureConfig& q) {
    return band_mean(1.0, kInf, lp, q);
}

double second_moment(const LevyParams& lp) {
    lp.validate();
    return std::pow(lp.lambda, lp.beta - 2.0) * special::gamma_fn(2.0 - lp.beta);
}

double truncated_second_moment(double eps, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (eps < 0.0) throw std::domain_error("truncated_second_moment requires eps >= 0");
    if (eps == 0.0) return 0.0;

    // z = c t^{1/(2-beta)} turns z^{1-beta} dz into a constant-leading-order
    // integrand on (0,1].
    const double zt = tempering_split(lp);
    const double c = std::min(eps, zt);
    const double p = 1.0 / (2.0 - lp.beta);
    const double scale = std::pow(c, 2.0 - lp.beta) * p;
    auto flattened = [&](double t) {
        const double z = c * std::pow(t, p);
        return scale * std::exp(-lp.lambda * z);
    };
    double total = integrate_adaptive(flattened, 0.0, 1.0, q).value;
    if (eps > c) {
        auto direct = [&](double z) { return std::pow(z, 1.0 - lp.beta) * std::exp(-lp.lambda * z); };
        total += integrate_adaptive(direct, c, eps, q).value;
    }
    return total;
}

double band_mass(double lo, double hi, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (!(lo > 0.0))
        throw std::domain_error("band_mass requires lo > 0 (infinite activity at the origin)");
    if (!(lo <= hi)) throw std::domain_error("band_mass requires lo <= hi");
    if (lo == hi) return 0.0;

    auto f = [&](double z) { return kernel(z, lp); };
    if (std::isinf(hi)) {
        const double zs = std::max(lo, tempering_split(lp));
        double total = (zs > lo) ? integrate_adaptive(f, lo, zs, q).value : 0.0;
        return total + integrate_tail(f, zs, q).value;
    }
    return integrate_adaptive(f, lo, hi, q).value;
}

double band_mean(double lo, double hi, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (lo < 0.0 || !(lo <= hi)) throw std::domain_error("band_mean requires 0 <= lo <= hi");
    if (lo == 0.0 && lp.beta >= 1.0)
        throw std::domain_error("band_mean: int_0 z nu(dz) diverges for beta >= 1");
    if (lo == hi) return 0.0;

    auto f = [&](double z) { return std::pow(z, -lp.beta) * std::exp(-lp.lambda * z); };
    double total = 0.0;
    double from = lo;
    if (lo == 0.0) {
        // flatten the z^{-beta} endpoint with z = c t^{1/(1-beta)}
        const double c = std::isinf(hi) ? 1.0 : std::min(hi, 1.0);
        const double p = 1.0 / (1.0 - lp.beta);
        const double scale = std::pow(c, 1.0 - lp.beta) * p;
        auto flattened = [&](double t) {
            const double z = c * std::pow(t, p);
            return scale * std::exp(-lp.lambda * z);
        };
        total += integrate_adaptive(flattened, 0.0, 1.0, q).value;
        from = c;
        if (from == hi) return total;
    }
    if (std::isinf(hi)) {
        const double zs = std::max(from, tempering_split(lp));
        if (zs > from) total += integrate_adaptive(f, from, zs, q).value;
        return total + integrate_tail(f, zs, q).value;
    }
    return total + integrate_adaptive(f, from, hi, q).value;
}

double log_moment2(double sigma, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (sigma < 0.0) throw std::domain_error("log_moment2 requires sigma >= 0");
    if (sigma == 0.0) return 0.0;

    auto f = [&](double z) {
        const double l = std::log1p(sigma * z);
        return l * l * kernel(z, lp);
    };
    // (ln(1+sigma z))^2 ~ sigma^2 z^2 kills two powers of the kernel; with
    // z = c t^{1/(2-beta)} the substituted integrand collapses to
    // p c^{2-beta} e^{-lambda z} (ln(1+sigma z)/z)^2, bounded on (0,1].
    const double c = series_cutoff_for(sigma, q);
    const double p = 1.0 / (2.0 - lp.beta);
    const double scale = p * std::pow(c, 2.0 - lp.beta);
    auto flattened = [&](double t) {
        if (t <= 0.0) return scale * sigma * sigma;
        const double z = c * std::pow(t, p);
        const double sz = sigma * z;
        const double r = (sz > 0.0) ? std::log1p(sz) / z : sigma;
        return scale * std::exp(-lp.lambda * z) * r * r;
    };
    double total = integrate_adaptive(flattened, 0.0, 1.0, q).value;
    const double zt = tempering_split(lp);
    if (zt > c) total += integrate_adaptive(f, c, zt, q).value;
    return total + integrate_tail(f, zt, q).value;
}

double log_tail_mean(double lo, double sigma, const LevyParams& lp, const QuadratureConfig& q) {
    lp.validate();
    q.validate();
    if (!(lo > 0.0)) throw std::domain_error("log_tail_mean requires lo > 0");
    if (sigma < 0.0) throw std::domain_error("log_tail_mean requires sigma >= 0");
    if (sigma == 0.0) return 0.0;

    auto f = [&](double z) { return std::log1p(sigma * z) * kernel(z, lp); };
    double total = 0.0;
    double from = lo;
    if (from < 1.0) {
        total += integrate_adaptive(f, from, 1.0, q).value;
        from = 1.0;
    }
    const double zt = std::max(from, tempering_split(lp));
    if (zt > from) total += integrate_adaptive(f, from, zt, q).value;
    return total + integrate_tail(f, zt, q).value;
}

}  // namespace tsh
