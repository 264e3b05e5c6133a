#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "tsharvest/gammafn.hpp"
#include "tsharvest/levy.hpp"

using namespace tsh;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const LevyParams kBaseline{0.7, 1.0};
const QuadratureConfig kQuad{};

double kernel(double z, const LevyParams& lp) {
    return std::exp(-lp.lambda * z) * std::pow(z, -1.0 - lp.beta);
}

// Brute-force I(sigma) on the transformed domain u = z/(1+z).
double phi_oracle(double sigma, const LevyParams& lp, long n = 4000000) {
    auto g = [&](double z) {
        const double lead = std::log1p(sigma * z) - (z <= 1.0 ? sigma * z : 0.0);
        return lead * kernel(z, lp);
    };
    return oracle::transformed_trapezoid(g, n);
}

}  // namespace

TEST_CASE("phi_integral: zero jump scale gives exactly zero") {
    CHECK(phi_integral(0.0, kBaseline, kQuad) == 0.0);
}

TEST_CASE("phi_integral at the baseline rounds A to 1.50 and h* to 0.75") {
    const double I = phi_integral(0.005, kBaseline, kQuad);
    const double A = 1.5 - 0.005 + I;
    CHECK(std::fabs(A - 1.50) < 0.005);
    CHECK(std::fabs(0.5 * A - 0.75) < 0.005);
}

TEST_CASE("phi_integral agrees with the transformed-trapezoid oracle") {
    for (auto [sigma, lp] : std::vector<std::pair<double, LevyParams>>{
             {0.005, {0.7, 1.0}}, {0.5, {0.7, 1.0}}, {0.05, {1.5, 2.0}}, {1.0, {0.3, 0.5}}}) {
        CHECK(phi_integral(sigma, lp, kQuad) ==
              doctest::Approx(phi_oracle(sigma, lp)).epsilon(1e-6));
    }
}

TEST_CASE("phi_integral decreases in beta and in lambda (5x5 grid)") {
    const double sigma = 0.005;
    const std::vector<double> betas{0.3, 0.675, 1.05, 1.425, 1.8};
    const std::vector<double> lambdas{0.5, 1.25, 2.0, 2.75, 3.5};
    for (double lam : lambdas) {
        double prev = kInf;
        for (double beta : betas) {
            const double v = phi_integral(sigma, {beta, lam}, kQuad);
            CHECK(v < prev);
            prev = v;
        }
    }
    for (double beta : betas) {
        double prev = kInf;
        for (double lam : lambdas) {
            const double v = phi_integral(sigma, {beta, lam}, kQuad);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("sensitivity_integral at sigma = 0 is the positive tail mean") {
    const double v = sensitivity_integral(0.0, kBaseline, kQuad);
    CHECK(v > 0.0);
    const double closed = std::pow(kBaseline.lambda, kBaseline.beta - 1.0) *
                          special::upper_gamma(1.0 - kBaseline.beta, kBaseline.lambda);
    CHECK(v == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("sensitivity_integral large-sigma limit") {
    // -> -int_0^1 e^{-z} z^{-0.7} dz; oracle by power-substituted trapezoid
    const double p = 1.0 / (1.0 - kBaseline.beta);
    auto g = [&](double t) { return p * std::exp(-std::pow(t, p)); };
    const double limit = -oracle::trapezoid(g, 1e-12, 1.0, 2000000);
    const double v = sensitivity_integral(1e6, kBaseline, kQuad);
    CHECK(v < 0.0);
    CHECK(std::fabs(v - limit) < 0.05 * std::fabs(limit));
}

TEST_CASE("sensitivity_integral is strictly decreasing in sigma") {
    double prev = kInf;
    for (double sigma : {0.0, 0.01, 0.1, 0.5, 1.0, 5.0, 50.0}) {
        const double v = sensitivity_integral(sigma, kBaseline, kQuad);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("finite-difference of phi_integral matches sensitivity_integral") {
    const double sigma = 0.005, delta = 1e-3;
    const double fd = (phi_integral(sigma + delta, kBaseline, kQuad) -
                       phi_integral(sigma - delta, kBaseline, kQuad)) /
                      (2.0 * delta);
    const double exact = sensitivity_integral(sigma, kBaseline, kQuad);
    CHECK(std::fabs(fd - exact) < std::max(1e-4, 10.0 * delta * delta));
}

TEST_CASE("tail_mean matches the incomplete-gamma closed form on a 5x5 grid") {
    for (double beta : {0.3, 0.675, 1.05, 1.425, 1.8}) {
        for (double lam : {0.5, 1.25, 2.0, 2.75, 3.5}) {
            const LevyParams lp{beta, lam};
            const double closed =
                std::pow(lam, beta - 1.0) * special::upper_gamma(1.0 - beta, lam);
            CHECK(tail_mean(lp, kQuad) == doctest::Approx(closed).epsilon(1e-8));
        }
    }
}

TEST_CASE("tail_mean edge cases") {
    CHECK(tail_mean({0.7, 50.0}, kQuad) < std::exp(-50.0) * 10.0);
    CHECK(tail_mean({1.0, 1.0}, kQuad) == doctest::Approx(oracle::e1_series(1.0)).epsilon(1e-9));
    CHECK(tail_mean({1.0, 1.0}, kQuad) == doctest::Approx(0.219384).epsilon(1e-5));
}

TEST_CASE("second_moment closed form") {
    CHECK(second_moment({1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(second_moment({1.0, 2.0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(second_moment({0.7, 1.0}) ==
          doctest::Approx(oracle::spouge_gamma(1.3)).epsilon(1e-11));
}

TEST_CASE("truncated_second_moment") {
    CHECK(truncated_second_moment(0.0, kBaseline, kQuad) == 0.0);
    // e^{-lambda z} ~ 1 below 0.01: integral ~ 0.01^{1.3}/1.3
    const double approx = std::pow(0.01, 1.3) / 1.3;
    CHECK(truncated_second_moment(0.01, kBaseline, kQuad) ==
          doctest::Approx(approx).epsilon(0.01));
    CHECK(truncated_second_moment(1e3, kBaseline, kQuad) ==
          doctest::Approx(second_moment(kBaseline)).epsilon(1e-8));
    double prev = -1.0;
    for (double eps : {0.001, 0.01, 0.1, 1.0, 10.0}) {
        const double v = truncated_second_moment(eps, kBaseline, kQuad);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("band_mass") {
    CHECK(band_mass(1.0, 1.0, kBaseline, kQuad) == 0.0);
    CHECK_THROWS_AS(band_mass(0.0, 1.0, kBaseline, kQuad), std::domain_error);

    const double whole = band_mass(0.01, kInf, kBaseline, kQuad);
    const double split =
        band_mass(0.01, 1.0, kBaseline, kQuad) + band_mass(1.0, kInf, kBaseline, kQuad);
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
    CHECK(whole > 0.0);

    auto f = [&](double z) { return kernel(z, kBaseline); };
    const double ref = oracle::riemann_midpoint(f, 0.5, 2.0, 1000000);
    CHECK(band_mass(0.5, 2.0, kBaseline, kQuad) == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("band_mean") {
    CHECK(band_mean(1.0, kInf, kBaseline, kQuad) ==
          doctest::Approx(tail_mean(kBaseline, kQuad)).epsilon(1e-10));
    // lambda -> 0 proxy: int_0^1 z^{-0.7} dz = 10/3
    CHECK(band_mean(0.0, 1.0, {0.7, 1e-8}, kQuad) ==
          doctest::Approx(10.0 / 3.0).epsilon(1e-6));
    CHECK_THROWS_AS(band_mean(0.0, 1.0, {1.5, 1.0}, kQuad), std::domain_error);
    const double whole = band_mean(0.1, 5.0, kBaseline, kQuad);
    const double split =
        band_mean(0.1, 1.0, kBaseline, kQuad) + band_mean(1.0, 5.0, kBaseline, kQuad);
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
}

TEST_CASE("log_moment2") {
    CHECK(log_moment2(0.0, kBaseline, kQuad) == 0.0);
    const double base = log_moment2(0.005, kBaseline, kQuad);
    CHECK(base > 0.0);
    CHECK(base < 1e-3);

    // near the beta -> 2 boundary, checked against a brute-force oracle
    const LevyParams hard{1.9, 1.0};
    const double sigma = 1.0;
    const double p = 1.0 / (2.0 - hard.beta);
    auto inner = [&](double t) {
        const double z = std::pow(t, p);
        const double l = std::log1p(sigma * z);
        return l * l * kernel(z, hard) * p * std::pow(t, p - 1.0);
    };
    auto outer = [&](double z) {
        const double l = std::log1p(sigma * z);
        return l * l * kernel(z, hard);
    };
    const double ref =
        oracle::trapezoid(inner, 1e-9, 1.0, 2000000) + oracle::trapezoid(outer, 1.0, 200.0, 2000000);
    const double v = log_moment2(sigma, hard, kQuad);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(ref).epsilon(1e-4));
}

TEST_CASE("log_tail_mean against a brute-force oracle") {
    const double sigma = 0.005;
    auto f = [&](double z) { return std::log1p(sigma * z) * kernel(z, kBaseline); };
    const double ref = oracle::trapezoid(f, 1e-3, 200.0, 4000000);
    CHECK(log_tail_mean(1e-3, sigma, kBaseline, kQuad) == doctest::Approx(ref).epsilon(1e-4));
    CHECK(log_tail_mean(1.0, 0.0, kBaseline, kQuad) == 0.0);
}

TEST_CASE("all levy outputs stay finite across the scan domain") {
    for (double beta : {0.06, 0.7, 1.0, 1.5, 1.94}) {
        for (double lam : {0.06, 1.0, 4.0}) {
            const LevyParams lp{beta, lam};
            for (double sigma : {1e-4, 0.1, 10.0}) {
                CHECK(std::isfinite(phi_integral(sigma, lp, kQuad)));
                CHECK(std::isfinite(sensitivity_integral(sigma, lp, kQuad)));
                CHECK(std::isfinite(log_moment2(sigma, lp, kQuad)));
            }
            CHECK(std::isfinite(tail_mean(lp, kQuad)));
            CHECK(std::isfinite(second_moment(lp)));
            CHECK(std::isfinite(truncated_second_moment(0.01, lp, kQuad)));
            CHECK(std::isfinite(band_mass(0.01, kInf, lp, kQuad)));
        }
    }
}

TEST_CASE("levy parameter validation") {
    CHECK_THROWS_AS(phi_integral(0.005, {2.5, 1.0}, kQuad), std::domain_error);
    CHECK_THROWS_AS(phi_integral(0.005, {0.7, -1.0}, kQuad), std::domain_error);
    CHECK_THROWS_AS(phi_integral(-0.1, kBaseline, kQuad), std::domain_error);
}
