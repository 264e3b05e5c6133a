#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tsharvest/errors.hpp"
#include "tsharvest/quadrature.hpp"

using namespace tsh;

TEST_CASE("adaptive quadrature reproduces exact integrals") {
    QuadratureConfig q;
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, q).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, q).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 30.0, q).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    // steep but smooth: a narrow Gaussian needs adaptivity to find the peak
    CHECK(integrate_adaptive([](double x) { return std::exp(-500.0 * (x - 0.3) * (x - 0.3)); },
                             0.0, 1.0, q)
              .value == doctest::Approx(std::sqrt(M_PI / 500.0)).epsilon(1e-9));
}

TEST_CASE("degenerate and reversed intervals") {
    QuadratureConfig q;
    CHECK(integrate_adaptive([](double x) { return x; }, 2.0, 2.0, q).value == 0.0);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0, q),
                    std::domain_error);
}

TEST_CASE("semi-infinite tail map") {
    QuadratureConfig q;
    CHECK(integrate_tail([](double z) { return std::exp(-z); }, 0.0, q).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_tail([](double z) { return std::exp(-z); }, 3.0, q).value ==
          doctest::Approx(std::exp(-3.0)).epsilon(1e-10));
    CHECK(integrate_tail([](double z) { return 1.0 / (z * z); }, 1.0, q).value ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exhausted subdivision budget throws with a partial estimate") {
    QuadratureConfig q;
    q.max_subdivisions = 3;
    q.rel_tol = 1e-14;
    q.abs_tol = 1e-300;
    bool thrown = false;
    try {
        integrate_adaptive([](double x) { return std::sqrt(std::fabs(std::sin(50.0 * x))); }, 0.0,
                           3.0, q);
    } catch (const QuadratureFailure& e) {
        thrown = true;
        CHECK(std::isfinite(e.partial_estimate));
        CHECK(e.error_estimate > 0.0);
    }
    CHECK(thrown);
}

TEST_CASE("config validation") {
    QuadratureConfig q;
    q.rel_tol = -1.0;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
    q = QuadratureConfig{};
    q.series_cutoff = 1.5;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
    q = QuadratureConfig{};
    q.max_subdivisions = 0;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
}
