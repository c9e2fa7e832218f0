#include "expratio/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace expratio {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// E1 by alternating series: -gamma - ln(mu) + sum (-1)^{k+1} mu^k / (k k!).
double e1_series(double mu) {
    double sum = -kEulerGamma - std::log(mu);
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -mu / k;
        const double add = -term / k;
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// E1 by the standard Lentz continued fraction, scaled by e^{-mu}.
double e1_continued_fraction(double mu) {
    constexpr double tiny = 1e-300;
    double b = mu + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-mu);
}

// Series for g(a) = sqrt(a) K1(2 sqrt(a)):
//   g(a) = 1/2 + (a/2) [ ln(a) S1(a) - S2(a) ],
//   S1 = sum a^k / (k! (k+1)!),  S2 = sum (psi(k+1) + psi(k+2)) a^k / (k! (k+1)!).
// Entire apart from the a*ln(a) factor; used for a <= 1 where it is
// free of cancellation.
double combo_series(double a) {
    double term = 1.0;              // a^k / (k! (k+1)!)
    double psi_k1 = -kEulerGamma;   // psi(k+1)
    double psi_k2 = 1.0 - kEulerGamma;  // psi(k+2)
    double s1 = 0.0, s2 = 0.0;
    for (int k = 0; k <= 40; ++k) {
        s1 += term;
        const double add2 = (psi_k1 + psi_k2) * term;
        s2 += add2;
        if (term < 1e-18 && std::abs(add2) < 1e-18) break;
        term *= a / ((k + 1.0) * (k + 2.0));
        psi_k1 = psi_k2;
        psi_k2 += 1.0 / (k + 2.0);
    }
    return 0.5 + 0.5 * a * (std::log(a) * s1 - s2);
}

// K1(x) = int_0^inf e^{-x cosh t} cosh t dt, evaluated adaptively. Used
// for x > 2 where the integrand is sharply concentrated and the series
// would cancel.
double k1_cosh_integral(double x) {
    const Tolerance tol{1e-14, 1e-13, 2000};
    return integrate_adaptive(
        [x](double t) {
            const double c = std::cosh(t);
            const double e = -x * c;
            return e < -745.0 ? 0.0 : std::exp(e) * c;
        },
        0.0, std::numeric_limits<double>::infinity(), tol);
}

}  // namespace

double exp_integral_e1(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("exp_integral_e1: mu must be positive");
    return mu <= 1.0 ? e1_series(mu) : e1_continued_fraction(mu);
}

double bessel_k1_combo(double mu, double s) {
    if (!(mu > 0.0)) throw std::domain_error("bessel_k1_combo: mu must be positive");
    if (!(s >= 0.0)) throw std::domain_error("bessel_k1_combo: s must be nonnegative");
    const double a = mu * s;
    if (a == 0.0) return 0.5;
    if (a <= 1.0) return combo_series(a);
    const double x = 2.0 * std::sqrt(a);
    if (x > 700.0) return 0.0;  // below double underflow
    return std::sqrt(a) * k1_cosh_integral(x);
}

}  // namespace expratio
