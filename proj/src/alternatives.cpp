#include "expratio/alternatives.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace expratio {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// Series branch of P(a, x), x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued-fraction branch of Q(a, x) = 1 - P(a, x), x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Monotone bisection of a cdf on (0, hi); 60 iterations.
template <class Cdf>
double invert_cdf(Cdf&& cdf, double u, double hi) {
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: a must be positive");
    if (x <= 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

AlternativeModel::AlternativeModel(Family family, double theta, double beta)
    : family_(family), theta_(theta), beta_(beta) {}

AlternativeModel AlternativeModel::weibull(double theta) {
    if (!(theta >= 0.0)) throw std::domain_error("weibull: theta must be >= 0");
    return {Family::weibull, theta, 0.0};
}

AlternativeModel AlternativeModel::gamma(double theta) {
    if (!(theta >= 0.0)) throw std::domain_error("gamma: theta must be >= 0");
    return {Family::gamma, theta, 0.0};
}

AlternativeModel AlternativeModel::emnw(double theta, double beta) {
    if (!(beta > 1.0)) throw std::domain_error("emnw: beta must be > 1");
    if (!(theta >= 0.0 && theta <= 1.0 / (beta - 1.0)))
        throw std::domain_error("emnw: theta must lie in [0, 1/(beta-1)]");
    return {Family::emnw, theta, beta};
}

AlternativeModel AlternativeModel::verhulst(double theta) {
    if (!(theta >= 0.0)) throw std::domain_error("verhulst: theta must be >= 0");
    return {Family::verhulst, theta, 0.0};
}

AlternativeModel AlternativeModel::kotlarski_inv_exp() {
    return {Family::kotlarski_inv_exp, 0.0, 0.0};
}
AlternativeModel AlternativeModel::kotlarski_half_cauchy() {
    return {Family::kotlarski_half_cauchy, 0.0, 0.0};
}
AlternativeModel AlternativeModel::kotlarski_x_over_cube() {
    return {Family::kotlarski_x_over_cube, 0.0, 0.0};
}

bool AlternativeModel::is_kotlarski() const noexcept {
    return family_ == Family::kotlarski_inv_exp || family_ == Family::kotlarski_half_cauchy ||
           family_ == Family::kotlarski_x_over_cube;
}

std::string AlternativeModel::name() const {
    switch (family_) {
        case Family::weibull: return "weibull";
        case Family::gamma: return "gamma";
        case Family::emnw: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "emnw(%g)", beta_);
            return buf;
        }
        case Family::verhulst: return "verhulst";
        case Family::kotlarski_inv_exp: return "kotlarski1";
        case Family::kotlarski_half_cauchy: return "kotlarski2";
        case Family::kotlarski_x_over_cube: return "kotlarski3";
    }
    return "?";
}

double AlternativeModel::density(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("density: x must be nonnegative");
    const double th = theta_;
    if (x == 0.0 && family_ == Family::kotlarski_inv_exp) return 0.0;
    switch (family_) {
        case Family::weibull:
            return (1.0 + th) * std::pow(x, th) * std::exp(-std::pow(x, 1.0 + th));
        case Family::gamma:
            return std::pow(x, th) * std::exp(-x - std::lgamma(th + 1.0));
        case Family::emnw:
            return (1.0 + th) * std::exp(-x) - th * beta_ * std::exp(-beta_ * x);
        case Family::verhulst:
            return (1.0 + th) * std::exp(-x) * std::pow(1.0 - std::exp(-x), th);
        case Family::kotlarski_inv_exp:
            return std::exp(-1.0 / x) / (x * x);
        case Family::kotlarski_half_cauchy:
            return std::pow(1.0 + x * x, -1.5);
        case Family::kotlarski_x_over_cube:
            return x * std::pow(1.0 + x * x, -1.5);
    }
    return 0.0;
}

double AlternativeModel::cdf(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("cdf: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double th = theta_;
    switch (family_) {
        case Family::weibull:
            return -std::expm1(-std::pow(x, 1.0 + th));
        case Family::gamma:
            return regularized_gamma_p(th + 1.0, x);
        case Family::emnw:
            return -(1.0 + th) * std::expm1(-x) + th * std::expm1(-beta_ * x);
        case Family::verhulst:
            return std::pow(-std::expm1(-x), 1.0 + th);
        case Family::kotlarski_inv_exp:
            return std::exp(-1.0 / x);
        case Family::kotlarski_half_cauchy:
            return x / std::sqrt(1.0 + x * x);
        case Family::kotlarski_x_over_cube:
            return 1.0 - 1.0 / std::sqrt(1.0 + x * x);
    }
    return 0.0;
}

double AlternativeModel::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile: u must lie in (0, 1)");
    const double th = theta_;
    switch (family_) {
        case Family::weibull:
            return std::pow(-std::log1p(-u), 1.0 / (1.0 + th));
        case Family::gamma:
            return invert_cdf([this](double x) { return cdf(x); }, u, 80.0);
        case Family::emnw:
            return invert_cdf([this](double x) { return cdf(x); }, u, 50.0);
        case Family::verhulst:
            return -std::log1p(-std::pow(u, 1.0 / (1.0 + th)));
        case Family::kotlarski_inv_exp:
            return -1.0 / std::log(u);
        case Family::kotlarski_half_cauchy:
            return u / std::sqrt(1.0 - u * u);
        case Family::kotlarski_x_over_cube: {
            const double c = 1.0 - u;
            return std::sqrt(1.0 / (c * c) - 1.0);
        }
    }
    return 0.0;
}

double AlternativeModel::score_h(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("score_h: x must be nonnegative");
    switch (family_) {
        case Family::weibull:
            return std::exp(-x) * (1.0 + (1.0 - x) * std::log(x));
        case Family::gamma:
            return std::exp(-x) * (std::log(x) + kEulerGamma);
        case Family::emnw:
            return std::exp(-x) - beta_ * std::exp(-beta_ * x);
        case Family::verhulst:
            return std::exp(-x) * (1.0 + std::log(-std::expm1(-x)));
        default:
            throw std::domain_error("score_h: not defined for Kotlarski families");
    }
}

Sample AlternativeModel::sample(std::size_t n, RngStream& rng) const {
    if (n < 2) throw std::invalid_argument("sample: need n >= 2");
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = quantile(rng.next_uniform());
    return Sample(std::move(values));
}

}  // namespace expratio
