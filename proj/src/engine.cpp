#include "tsharvest/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "tsharvest/errors.hpp"
#include "tsharvest/parallel.hpp"

namespace tsh {

namespace {

// Extinction is declared when the state stays at or below this level for
// kExtinctionSteps consecutive steps (10 time units at dt = 1e-3); a
// sustained-threshold rule avoids false positives from transient dips.
constexpr double kExtinctionThreshold = 1e-4;
constexpr long long kExtinctionSteps = 10000;

// Floor for ln x in the log scheme; keeps e^y a positive normal double.
constexpr double kLogFloor = -700.0;

struct Stepper {
    const ModelParams& p;
    const SimConfig& cfg;
    double sqrt_dt;
    double tau = 0.0;
    bool jumps;
    JumpScheme scheme;
    double drift_dt = 0.0;       // drift_correction * dt
    double gauss_sd = 0.0;       // per-step small-jump sd in x space
    double phi = 0.0;            // log-scheme drift constant
    double clog_dt = 0.0;        // int_eps^inf ln(1+sigma z) nu(dz) * dt
    double log_gauss_sd = 0.0;   // per-step small-jump sd in log space

    Stepper(const ModelParams& params, const SimConfig& config, const QuadratureConfig& q)
        : p(params),
          cfg(config),
          sqrt_dt(std::sqrt(config.dt)),
          tau(std::sqrt(params.tau2)),
          jumps(params.sigma > 0.0) {
        if (jumps) {
            scheme = build_scheme(p.levy, cfg.jump_eps, cfg.small_jump_mode, q);
            drift_dt = scheme.drift_correction * cfg.dt;
            if (scheme.small_jump_mode == SmallJumpMode::GaussianApprox) {
                const double var = scheme.small_var * cfg.dt;
                if (var >= 1e-18) gauss_sd = std::sqrt(var);
            }
        }
        if (cfg.scheme == Scheme::LogExact) {
            phi = threshold_phi(p, q);
            if (jumps) {
                clog_dt = log_tail_mean(cfg.jump_eps, p.sigma, p.levy, q) * cfg.dt;
                log_gauss_sd = p.sigma * gauss_sd;
            }
        }
    }

    struct Noise {
        double xi = 0.0;       // Brownian N(0,1)
        double g = 0.0;        // small-jump Gaussian N(0,1)
        JumpAggregates agg;
    };

    Noise draw(Rng& rng) const {
        Noise n;
        n.xi = rng.normal();
        if (jumps) {
            n.agg = sample_step_jumps(cfg.dt, scheme, p.levy, p.sigma, rng);
            if (gauss_sd > 0.0) n.g = rng.normal();
        }
        return n;
    }
};

// Per-path integration state: advances x, accumulates the time integral,
// tracks the extinction streak, and records at the stride.
class PathState {
public:
    PathState(const Stepper& s, double x0) : s_(s), x_(x0) {
        if (!(x0 > 0.0)) throw std::domain_error("simulate_path requires x0 > 0");
        y_ = std::log(x0);
        const std::size_t n_rec =
            static_cast<std::size_t>(std::llround(s.cfg.horizon / s.cfg.dt)) / s.cfg.record_stride + 2;
        rec_.times.reserve(n_rec);
        rec_.states.reserve(n_rec);
        rec_.running_time_avg.reserve(n_rec);
        rec_.times.push_back(0.0);
        rec_.states.push_back(x0);
        rec_.running_time_avg.push_back(x0);  // (1/t) int_0^t x -> x(0) as t -> 0
    }

    void advance(const Stepper::Noise& n, long long step) {
        const ModelParams& p = s_.p;
        const double dt = s_.cfg.dt;
        double x_new;
        if (s_.cfg.scheme == Scheme::EulerDirect) {
            const double dl = n.agg.sum_z + s_.drift_dt + s_.gauss_sd * n.g;
            x_new = x_ + x_ * (p.a - p.h - p.b * x_) * dt + s_.tau * x_ * s_.sqrt_dt * n.xi +
                    p.sigma * x_ * dl;
            if (!std::isfinite(x_new))
                throw SimulationError("EulerDirect state became non-finite",
                                      static_cast<std::size_t>(step));
            if (x_new < s_.cfg.extinction_floor) x_new = s_.cfg.extinction_floor;
        } else {
            y_ += (s_.phi - p.b * std::exp(y_)) * dt + s_.tau * s_.sqrt_dt * n.xi +
                  n.agg.sum_log1p - s_.clog_dt + s_.log_gauss_sd * n.g;
            if (!std::isfinite(y_))
                throw SimulationError("LogExact state became non-finite",
                                      static_cast<std::size_t>(step));
            if (y_ < kLogFloor) y_ = kLogFloor;
            x_new = std::exp(y_);
        }

        cum_ += 0.5 * (x_ + x_new) * dt;
        x_ = x_new;

        if (x_ <= kExtinctionThreshold) {
            if (streak_start_ < 0) streak_start_ = step;
        } else {
            streak_start_ = -1;
        }

        if (step % s_.cfg.record_stride == 0 || step == n_steps()) {
            const double t = step * dt;
            rec_.times.push_back(t);
            rec_.states.push_back(x_);
            rec_.running_time_avg.push_back(cum_ / t);
        }
    }

    long long n_steps() const { return std::llround(s_.cfg.horizon / s_.cfg.dt); }

    PathRecord finish() {
        rec_.terminal_x = x_;
        if (streak_start_ >= 0 && n_steps() - streak_start_ + 1 >= kExtinctionSteps)
            rec_.extinct_at = streak_start_ * s_.cfg.dt;
        return std::move(rec_);
    }

private:
    const Stepper& s_;
    double x_;
    double y_ = 0.0;
    double cum_ = 0.0;
    long long streak_start_ = -1;
    PathRecord rec_;
};

}  // namespace

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw std::domain_error("SimConfig: dt must be positive");
    if (!(horizon > dt)) throw std::domain_error("SimConfig: horizon must exceed dt");
    if (!(burn_in >= 0.0 && burn_in < horizon))
        throw std::domain_error("SimConfig: burn_in must lie in [0, horizon)");
    if (!(x0 > 0.0)) throw std::domain_error("SimConfig: x0 must be positive");
    if (!(extinction_floor > 0.0))
        throw std::domain_error("SimConfig: extinction_floor must be positive");
    if (record_stride < 1) throw std::domain_error("SimConfig: record_stride must be >= 1");
    if (!(jump_eps > 0.0 && jump_eps < 1.0))
        throw std::domain_error("SimConfig: jump_eps must lie in (0, 1)");
}

double PathRecord::time_average(double from) const {
    if (times.size() < 2) throw std::domain_error("time_average: path has no recorded interval");
    const double t_end = times.back();
    if (from <= 0.0) return running_time_avg.back();
    std::size_t i = 0;
    while (i + 1 < times.size() && times[i] < from - 1e-12) ++i;
    const double t0 = times[i];
    if (!(t0 < t_end)) throw std::domain_error("time_average: burn-in leaves no interval");
    const double cum_end = running_time_avg.back() * t_end;
    const double cum0 = running_time_avg[i] * t0;
    return (cum_end - cum0) / (t_end - t0);
}

PathRecord simulate_path(const ModelParams& p, const SimConfig& cfg, const QuadratureConfig& q) {
    p.validate();
    cfg.validate();
    const Stepper stepper(p, cfg, q);
    Rng rng(cfg.rng);
    PathState state(stepper, cfg.x0);
    const long long n = state.n_steps();
    for (long long step = 1; step <= n; ++step) state.advance(stepper.draw(rng), step);
    return state.finish();
}

std::pair<PathRecord, PathRecord> simulate_coupled_pair(const ModelParams& p, const SimConfig& cfg,
                                                        double x0_a, double x0_b,
                                                        const QuadratureConfig& q) {
    p.validate();
    cfg.validate();
    const Stepper stepper(p, cfg, q);
    Rng rng(cfg.rng);
    PathState sa(stepper, x0_a);
    PathState sb(stepper, x0_b);
    const long long n = sa.n_steps();
    for (long long step = 1; step <= n; ++step) {
        const Stepper::Noise noise = stepper.draw(rng);
        sa.advance(noise, step);
        sb.advance(noise, step);
    }
    return {sa.finish(), sb.finish()};
}

SchemeCrossCheck scheme_cross_check(const ModelParams& p, const SimConfig& cfg, int n_paths,
                                    const QuadratureConfig& q, int threads) {
    if (n_paths < 1) throw std::domain_error("scheme_cross_check requires n_paths >= 1");
    std::vector<double> avg_direct(n_paths), avg_log(n_paths);
    parallel_for(2 * n_paths, threads, [&](int i) {
        SimConfig c = cfg;
        c.scheme = (i < n_paths) ? Scheme::EulerDirect : Scheme::LogExact;
        c.rng.stream_id = cfg.rng.stream_id + static_cast<std::uint64_t>(i);
        const PathRecord rec = simulate_path(p, c, q);
        (i < n_paths ? avg_direct[i] : avg_log[i - n_paths]) = rec.time_average(cfg.burn_in);
    });
    SchemeCrossCheck out;
    for (double v : avg_direct) out.avg_direct += v;
    for (double v : avg_log) out.avg_log += v;
    out.avg_direct /= n_paths;
    out.avg_log /= n_paths;
    out.rel_gap = std::fabs(out.avg_direct - out.avg_log) / std::fabs(out.avg_log);
    return out;
}

}  // namespace tsh
