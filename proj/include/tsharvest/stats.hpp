#pragma once

#include <utility>
#include <vector>

#include "tsharvest/analytics.hpp"
#include "tsharvest/engine.hpp"

namespace tsh {

struct EnsembleSummary {
    int n_paths = 0;
    double time_avg_mean = 0.0;
    double time_avg_stderr = 0.0;
    double yield_mean = 0.0;          // h * time_avg_mean
    double extinction_fraction = 0.0;
    double moment2_mean = 0.0;        // ensemble/time mean of x^2 past burn-in
};

// Per-path time averages over [burn_in, horizon] (exact full-resolution
// accumulator values), reduced across the ensemble.
EnsembleSummary summarize_ensemble(const std::vector<PathRecord>& paths, const ModelParams& p,
                                   double burn_in);

// Cross-check of the recording stride: time average recomputed by trapezoid
// on the recorded grid alone (the engine accumulator is authoritative; the
// two must agree closely).
double time_average_on_grid(const PathRecord& path, double burn_in);

struct CouplingReport {
    std::vector<double> times;
    std::vector<double> mean_abs_gap;  // E|x - x~| over pairs at each recorded time
    double initial_gap = 0.0;
    double final_over_initial = 0.0;
};

CouplingReport coupling_decay(const std::vector<std::pair<PathRecord, PathRecord>>& pairs);

// 1-Wasserstein distance between the empirical distributions of two
// samples: the exact area between their quantile functions (equal-weight
// sorted coupling; reduces to the mean sorted |a_(i) - b_(i)| for equal
// sizes).
double wasserstein1(std::vector<double> sample_a, std::vector<double> sample_b);

}  // namespace tsh
