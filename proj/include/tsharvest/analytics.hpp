#pragma once

// Closed-form model analysis for
//   dx = x(a - h - b x) dt + tau x dB + sigma x^- dL,
// with L the compensated one-sided tempered stable process. The threshold
//   Phi = a - h - tau^2/2 + I(sigma)
// classifies extinction (Phi < 0), non-persistence (Phi = 0) and
// time-average persistence with mean Phi/b (Phi > 0). With
//   A = a - tau^2/2 + I(sigma)
// the expected sustainable yield is Y(h) = h(A - h)/b for h in (0, A), the
// optimal effort is h* = A/2 and the maximum yield Y* = A^2/(4b).

#include "tsharvest/levy.hpp"
#include "tsharvest/quadrature.hpp"

namespace tsh {

struct ModelParams {
    double a;     // intrinsic growth rate
    double b;     // intraspecific competition
    double h;     // harvesting effort
    double tau2;  // white-noise intensity tau^2
    double sigma; // jump scale
    LevyParams levy;

    void validate() const;
};

enum class RegimeTag { Extinction, NonPersistent, Persistent };

struct Regime {
    RegimeTag tag;
    double phi;
};

struct OptimalPolicy {
    double capacity;  // A
    double h_star;    // A/2
    double y_star;    // A^2/(4b)
};

struct Sensitivities {
    double dh_dtau2;   // -1/4, exact
    double dy_dtau2;   // -h*/(4b)
    double dh_dsigma;  // I'(sigma)/2
    double dy_dsigma;  // (2 h*/b) dh_dsigma
};

// A = a - tau^2/2 + I(sigma); independent of h and b.
double capacity_A(const ModelParams& p, const QuadratureConfig& q);

// Phi = A - h; exactly linear in h with slope -1.
double threshold_phi(const ModelParams& p, const QuadratureConfig& q);

Regime classify(const ModelParams& p, const QuadratureConfig& q, double tol = 1e-9);

// Phi/b; requires Phi > 0.
double mean_population(const ModelParams& p, const QuadratureConfig& q);

// Y(h) = h(A - h)/b on (0, A); 0 for h = 0 and for h >= A (zero yield in the
// non-persistent and extinct regimes).
double expected_yield(const ModelParams& p, const QuadratureConfig& q);

// (A, A/2, A^2/(4b)); requires A > 0. The h field of p is ignored.
OptimalPolicy optimal_policy(const ModelParams& p, const QuadratureConfig& q);

// Unique root of I'(sigma) = 0, located by geometric bracket expansion from
// bracket_hint followed by bisection. I' is strictly decreasing in sigma.
double critical_sigma(const LevyParams& lp, const QuadratureConfig& q, double bracket_hint = 1.0);

Sensitivities sensitivities(const ModelParams& p, const QuadratureConfig& q);

}  // namespace tsh
