#pragma once

#include <vector>

#include "expratio/sample.hpp"

namespace expratio {

// Selects one of the two exponentiality test statistics: the integral
// statistic W (with exponential weight parameter mu) or the
// Kolmogorov-type statistic D. Large values of |W| and of D are critical.
struct TestStatistic {
    enum class Kind { w, d };

    Kind kind;
    double mu;  // weight parameter, meaningful only for W

    static TestStatistic w(double mu);
    static TestStatistic d() { return {Kind::d, 0.0}; }

    const char* name() const { return kind == Kind::w ? "W" : "D"; }
};

// U-empirical distribution function of the pairwise ratios,
//   H_n(t) = (1 / n(n-1)) sum_{i != j} 1{ X_i / X_j < t }.
// The indicator is strict, so H_n is the left-continuous version of the
// step function; H_n(0) = 0 and H_n(t) -> 1 as t -> inf.
double u_empirical_cdf(const Sample& sample, double t);

// Integral statistic
//   W_n = int_0^inf ( t/(1+t) - H_n(t) ) mu e^{-mu t} dt,
// computed exactly as the mean over unordered pairs of the centered kernel
//   Phi(x, y) = 1 - mu e^mu E1(mu) - (1/2) e^{-mu x/y} - (1/2) e^{-mu y/x}.
// Scale invariant. O(n^2); the pair sum is Kahan-compensated so samples up
// to n ~ 10^4 keep full precision.
double statistic_w(const Sample& sample, double mu);

// Kolmogorov-type statistic D_n = sup_{t >= 0} | t/(1+t) - H_n(t) |.
// The supremum is attained at a jump of H_n, approached from the left or
// from the right; both one-sided values are examined at every jump, which
// makes the result exact. Scale invariant, in [0, 1]. O(n^2 log n).
double statistic_d(const Sample& sample);

// All n(n-1) ordered ratios X_i / X_j (i != j), ascending, ties kept.
// These are the jump locations of H_n.
std::vector<double> ratio_jump_points(const Sample& sample);

// Statistic value as used for testing: |W_n| for W, D_n for D.
double evaluate_statistic(const TestStatistic& statistic, const Sample& sample);

}  // namespace expratio
