#include "tsharvest/gammafn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsh::special {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i - 1.0);
    return s;
}

// Series for the regularized lower incomplete gamma, x < s + 1.
double gamma_p_series(double s, double x) {
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
    }
    throw std::runtime_error("gamma_p series failed to converge");
}

// Unnormalized continued fraction for Gamma(s,x); converges for x >= 1
// (any real s) and for x >= s + 1. Modified Lentz.
double upper_gamma_cf(double s, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) return std::exp(-x + s * std::log(x)) * h;
    }
    throw std::runtime_error("upper gamma continued fraction failed to converge");
}

// E1 power series, suitable for 0 < x <= 1.
double e1_series(double x) {
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        const double add = -term / k;
        sum += add;
        if (std::fabs(add) < std::fabs(sum) * std::numeric_limits<double>::epsilon()) break;
    }
    return sum;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn requires x > 0");
    if (x < 0.5) return gamma_fn(x + 1.0) / x;
    const double z = x - 1.0;
    const double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z + 1.0);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z + 1.0));
}

double gamma_p(double s, double x) {
    if (!(s > 0.0) || x < 0.0) throw std::domain_error("gamma_p requires s > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return gamma_p_series(s, x);
    return 1.0 - upper_gamma_cf(s, x) / gamma_fn(s);
}

double gamma_q(double s, double x) {
    if (!(s > 0.0) || x < 0.0) throw std::domain_error("gamma_q requires s > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return upper_gamma_cf(s, x) / gamma_fn(s);
}

double lower_gamma(double s, double x) {
    return gamma_p(s, x) * gamma_fn(s);
}

double upper_gamma(double s, double x) {
    if (x < 0.0) throw std::domain_error("upper_gamma requires x >= 0");
    if (x == 0.0) {
        if (s > 0.0) return gamma_fn(s);
        return std::numeric_limits<double>::infinity();
    }
    if (x >= 1.0 || (s > 0.0 && x >= s + 1.0)) return upper_gamma_cf(s, x);
    // x < 1 from here on
    if (s > 1e-14) return gamma_q(s, x) * gamma_fn(s);
    if (std::fabs(s) <= 1e-14) return e1_series(x);
    // s < 0: lift with Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}
    return (upper_gamma(s + 1.0, x) - std::pow(x, s) * std::exp(-x)) / s;
}

double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1 requires x > 0");
    if (x <= 1.0) return e1_series(x);
    return upper_gamma_cf(0.0, x);
}

double partial_moment(double s, double lambda, double c) {
    if (!(s > 0.0) || lambda < 0.0 || c < 0.0)
        throw std::domain_error("partial_moment requires s > 0, lambda >= 0, c >= 0");
    if (c == 0.0) return 0.0;
    const double x = lambda * c;
    // gamma(s,x) series rescaled by lambda^{-s}: c^s e^{-x} sum_n x^n / (s(s+1)...(s+n))
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            return std::pow(c, s) * std::exp(-x) * sum;
    }
    throw std::runtime_error("partial_moment series failed to converge");
}

}  // namespace tsh::special
