#include "tsharvest/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsharvest/errors.hpp"

namespace tsh {

void ModelParams::validate() const {
    if (!(a > 0.0)) throw std::domain_error("ModelParams: a must be positive");
    if (!(b > 0.0)) throw std::domain_error("ModelParams: b must be positive");
    if (h < 0.0) throw std::domain_error("ModelParams: h must be nonnegative");
    if (tau2 < 0.0) throw std::domain_error("ModelParams: tau2 must be nonnegative");
    if (sigma < 0.0) throw std::domain_error("ModelParams: sigma must be nonnegative");
    levy.validate();
}

double capacity_A(const ModelParams& p, const QuadratureConfig& q) {
    p.validate();
    return p.a - 0.5 * p.tau2 + phi_integral(p.sigma, p.levy, q);
}

double threshold_phi(const ModelParams& p, const QuadratureConfig& q) {
    return capacity_A(p, q) - p.h;
}

Regime classify(const ModelParams& p, const QuadratureConfig& q, double tol) {
    if (tol < 0.0) throw std::domain_error("classify requires tol >= 0");
    const double phi = threshold_phi(p, q);
    if (phi < -tol) return {RegimeTag::Extinction, phi};
    if (phi > tol) return {RegimeTag::Persistent, phi};
    return {RegimeTag::NonPersistent, phi};
}

double mean_population(const ModelParams& p, const QuadratureConfig& q) {
    const double phi = threshold_phi(p, q);
    if (!(phi > 0.0)) throw RegimeError("mean_population: no positive stationary mean (Phi <= 0)");
    return phi / p.b;
}

double expected_yield(const ModelParams& p, const QuadratureConfig& q) {
    const double cap = capacity_A(p, q);
    if (p.h <= 0.0 || p.h >= cap) return 0.0;
    return p.h * (cap - p.h) / p.b;
}

OptimalPolicy optimal_policy(const ModelParams& p, const QuadratureConfig& q) {
    const double cap = capacity_A(p, q);
    if (!(cap > 0.0)) throw RegimeError("optimal_policy: no optimal harvesting policy (A <= 0)");
    return {cap, 0.5 * cap, cap * cap / (4.0 * p.b)};
}

double critical_sigma(const LevyParams& lp, const QuadratureConfig& q, double bracket_hint) {
    lp.validate();
    if (!(bracket_hint > 0.0)) throw std::domain_error("critical_sigma requires bracket_hint > 0");

    auto deriv = [&](double s) { return sensitivity_integral(s, lp, q); };

    // I' is strictly decreasing: expand geometrically until the sign flips.
    double lo = bracket_hint, hi = bracket_hint;
    double f_hint = deriv(bracket_hint);
    if (f_hint == 0.0) return bracket_hint;
    if (f_hint > 0.0) {
        double f_hi = f_hint;
        int i = 0;
        for (; i < 60 && f_hi > 0.0; ++i) {
            lo = hi;
            hi *= 2.0;
            f_hi = deriv(hi);
        }
        if (f_hi > 0.0) throw BracketingError("critical_sigma: no sign change after 60 doublings up");
    } else {
        double f_lo = f_hint;
        int i = 0;
        for (; i < 60 && f_lo < 0.0; ++i) {
            hi = lo;
            lo *= 0.5;
            f_lo = deriv(lo);
        }
        if (f_lo < 0.0) throw BracketingError("critical_sigma: no sign change after 60 halvings down");
    }

    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        const double f_mid = deriv(mid);
        if (std::fabs(f_mid) <= q.abs_tol || (hi - lo) <= 4.0 * std::numeric_limits<double>::epsilon() * mid)
            return mid;
        if (f_mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

Sensitivities sensitivities(const ModelParams& p, const QuadratureConfig& q) {
    const OptimalPolicy pol = optimal_policy(p, q);
    const double dh_dsigma = 0.5 * sensitivity_integral(p.sigma, p.levy, q);
    return {
        -0.25,
        -pol.h_star / (4.0 * p.b),
        dh_dsigma,
        (2.0 * pol.h_star / p.b) * dh_dsigma,
    };
}

}  // namespace tsh
