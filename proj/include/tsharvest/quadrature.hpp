#pragma once

#include <functional>

namespace tsh {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    // Cap on the small-z split point used by the series expansion in the
    // levy integrals; the effective cutoff is min(series_cutoff, 1e-3/sigma).
    double series_cutoff = 0.5;
    int max_subdivisions = 200;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive G7/K15 on a finite interval [a, b]. Throws QuadratureFailure
// (carrying the partial estimate) if the subdivision budget is exhausted
// before the error estimate drops below max(abs_tol, rel_tol * |value|).
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureConfig& q);

// Semi-infinite integral over [c, infinity), mapped to u in [0,1) via
// z = c + u/(1-u), then integrated adaptively.
QuadResult integrate_tail(const Integrand& f, double c, const QuadratureConfig& q);

}  // namespace tsh
