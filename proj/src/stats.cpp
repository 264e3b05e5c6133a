#include "tsharvest/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsh {

EnsembleSummary summarize_ensemble(const std::vector<PathRecord>& paths, const ModelParams& p,
                                   double burn_in) {
    if (paths.empty()) throw std::domain_error("summarize_ensemble: empty path collection");

    EnsembleSummary s;
    s.n_paths = static_cast<int>(paths.size());

    double sum = 0.0, sum_sq = 0.0, m2 = 0.0;
    int extinct = 0;
    for (const PathRecord& path : paths) {
        const double avg = path.time_average(burn_in);
        sum += avg;
        sum_sq += avg * avg;
        if (path.extinct_at) ++extinct;

        double acc = 0.0;
        std::size_t n_pts = 0;
        for (std::size_t i = 0; i < path.times.size(); ++i) {
            if (path.times[i] < burn_in) continue;
            acc += path.states[i] * path.states[i];
            ++n_pts;
        }
        if (n_pts == 0) throw std::domain_error("summarize_ensemble: burn-in past last record");
        m2 += acc / static_cast<double>(n_pts);
    }

    const int n = s.n_paths;
    s.time_avg_mean = sum / n;
    if (n > 1) {
        const double var = std::max(0.0, (sum_sq - n * s.time_avg_mean * s.time_avg_mean) / (n - 1));
        s.time_avg_stderr = std::sqrt(var / n);
    }
    s.yield_mean = p.h * s.time_avg_mean;
    s.extinction_fraction = static_cast<double>(extinct) / n;
    s.moment2_mean = m2 / n;
    return s;
}

double time_average_on_grid(const PathRecord& path, double burn_in) {
    double integral = 0.0, span = 0.0;
    for (std::size_t i = 1; i < path.times.size(); ++i) {
        if (path.times[i - 1] < burn_in - 1e-12) continue;
        const double dt = path.times[i] - path.times[i - 1];
        integral += 0.5 * (path.states[i] + path.states[i - 1]) * dt;
        span += dt;
    }
    if (span <= 0.0) throw std::domain_error("time_average_on_grid: no interval past burn-in");
    return integral / span;
}

CouplingReport coupling_decay(const std::vector<std::pair<PathRecord, PathRecord>>& pairs) {
    if (pairs.empty()) throw std::domain_error("coupling_decay: empty pair collection");
    const std::vector<double>& grid = pairs.front().first.times;
    for (const auto& [a, b] : pairs) {
        if (a.times != grid || b.times != grid)
            throw std::domain_error("coupling_decay: mismatched time grids");
    }

    CouplingReport rep;
    rep.times = grid;
    rep.mean_abs_gap.assign(grid.size(), 0.0);
    for (const auto& [a, b] : pairs) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            rep.mean_abs_gap[i] += std::fabs(a.states[i] - b.states[i]);
    }
    for (double& g : rep.mean_abs_gap) g /= static_cast<double>(pairs.size());
    rep.initial_gap = rep.mean_abs_gap.front();
    rep.final_over_initial =
        rep.initial_gap > 0.0 ? rep.mean_abs_gap.back() / rep.initial_gap : 0.0;
    return rep;
}

double wasserstein1(std::vector<double> sample_a, std::vector<double> sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::domain_error("wasserstein1: empty sample");
    std::sort(sample_a.begin(), sample_a.end());
    std::sort(sample_b.begin(), sample_b.end());

    // Sweep the merged quantile breakpoints: on each u-interval both
    // quantile functions are constant at the current order statistics.
    const std::size_t na = sample_a.size(), nb = sample_b.size();
    std::size_t ia = 0, ib = 0;
    double u = 0.0, dist = 0.0;
    while (ia < na && ib < nb) {
        const double qa = static_cast<double>(ia + 1) / na;
        const double qb = static_cast<double>(ib + 1) / nb;
        const double u_next = std::min(qa, qb);
        dist += (u_next - u) * std::fabs(sample_a[ia] - sample_b[ib]);
        u = u_next;
        if (qa <= u_next) ++ia;
        if (qb <= u_next) ++ib;
    }
    return dist;
}

}  // namespace tsh
