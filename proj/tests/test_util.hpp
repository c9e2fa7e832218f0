#pragma once

// Shared test-only helpers: independent oracles and small generators.
// Everything here stays independent of the implementation paths it checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "expratio/quadrature.hpp"
#include "expratio/rng.hpp"
#include "expratio/sample.hpp"

namespace testutil {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Random positive sample from a lognormal-ish spread, for property tests.
inline expratio::Sample random_sample(expratio::RngStream& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v)
        x = std::exp(2.0 * (rng.next_uniform() - 0.5)) * (0.1 + 3.0 * rng.next_uniform());
    return expratio::Sample(std::move(v));
}

// Piecewise quadrature of int_0^inf (t/(1+t) - H_n(t)) mu e^{-mu t} dt:
// the integrand is smooth between consecutive jump points of H_n, so each
// piece integrates cleanly. Independent of the pair-kernel route.
inline double w_quadrature_oracle(const std::vector<double>& sorted_ratios, double mu) {
    const expratio::Tolerance tol{1e-12, 1e-12, 4000};
    const double total = static_cast<double>(sorted_ratios.size());

    auto piece = [&](double a, double b, double h) {
        return expratio::integrate_adaptive(
            [mu, h](double t) { return (t / (1.0 + t) - h) * mu * std::exp(-mu * t); }, a, b,
            tol);
    };

    double sum = 0.0;
    double lo = 0.0;
    std::size_t below = 0;
    std::size_t i = 0;
    while (i < sorted_ratios.size()) {
        std::size_t j = i;
        while (j < sorted_ratios.size() && sorted_ratios[j] == sorted_ratios[i]) ++j;
        sum += piece(lo, sorted_ratios[i], static_cast<double>(below) / total);
        lo = sorted_ratios[i];
        below = j;
        i = j;
    }
    sum += piece(lo, kInf, 1.0);
    return sum;
}

// Brute-force D_n: max of |t/(1+t) - H_n(t)| over a dense grid plus both
// one-sided values at every jump. H_n is evaluated by binary search on the
// sorted ratio list (strict inequality).
inline double d_bruteforce_oracle(const std::vector<double>& sorted_ratios,
                                  std::size_t grid_points = 1000000) {
    const double total = static_cast<double>(sorted_ratios.size());
    auto h_at = [&](double t) {
        return static_cast<double>(std::lower_bound(sorted_ratios.begin(), sorted_ratios.end(),
                                                    t) -
                                   sorted_ratios.begin()) /
               total;
    };

    const double t_max = sorted_ratios.back() * 1.01;
    double d = 0.0;
    for (std::size_t g = 0; g <= grid_points; ++g) {
        const double t = t_max * static_cast<double>(g) / static_cast<double>(grid_points);
        d = std::max(d, std::abs(t / (1.0 + t) - h_at(t)));
    }
    for (std::size_t i = 0; i < sorted_ratios.size();) {
        std::size_t j = i;
        while (j < sorted_ratios.size() && sorted_ratios[j] == sorted_ratios[i]) ++j;
        const double r = sorted_ratios[i];
        const double f = r / (1.0 + r);
        d = std::max(d, std::abs(f - static_cast<double>(i) / total));
        d = std::max(d, std::abs(f - static_cast<double>(j) / total));
        i = j;
    }
    return d;
}

// Two-sample-free Kolmogorov distance of a sorted sample against a cdf.
template <class Cdf>
double kolmogorov_distance(std::vector<double> values, Cdf&& cdf) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double f = cdf(values[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

}  // namespace testutil
