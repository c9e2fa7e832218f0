#pragma once

#include <cstdint>
#include <vector>

#include "expratio/alternatives.hpp"
#include "expratio/statistics.hpp"

namespace expratio {

// Empirical null distribution of a statistic at fixed sample size:
// sorted Monte Carlo replicates plus the seed that regenerates them.
// For W the stored values are |W_n|.
struct NullDistribution {
    TestStatistic statistic;
    int n = 0;
    std::vector<double> replicates;  // ascending
    std::uint64_t seed = 0;
    int rep_count = 0;
};

struct PowerResult {
    AlternativeModel model;
    TestStatistic statistic;
    int n = 0;
    double alpha = 0.0;
    double power = 0.0;
    int rep_count = 0;
    std::uint64_t seed = 0;
};

// reps i.i.d. Exp(1) samples of size n (scale invariance makes the rate
// irrelevant), statistic evaluated on each. Replicate k draws from the
// stream derived from (seed, purpose(statistic), k), so the result is
// bit-identical for a fixed seed regardless of thread count.
NullDistribution simulate_null(const TestStatistic& statistic, int n, int reps,
                               std::uint64_t seed);

// Empirical (1-alpha)-quantile: the order statistic with 1-based rank
// ceil((1-alpha) * rep_count).
double critical_value(const NullDistribution& dist, double alpha);

// Monte Carlo p-value with the add-one estimator,
//   (1 + #{replicates >= observed}) / (reps + 1),
// never exactly zero. `observed` is |W_n| or D_n.
double p_value(const TestStatistic& statistic, double observed, int n, int reps,
               std::uint64_t seed);

// Statistic values (|W| or D) over reps samples drawn from the model;
// replicate order, independent of the null-simulation streams.
std::vector<double> simulate_alternative(const AlternativeModel& model,
                                         const TestStatistic& statistic, int n, int reps,
                                         std::uint64_t seed);

// Fraction of alternative replicates whose statistic exceeds the critical
// value of an independently simulated null at the same n.
PowerResult power(const AlternativeModel& model, const TestStatistic& statistic, int n,
                  double alpha, int reps, std::uint64_t seed);

// Same mechanics as power, restricted to the Kotlarski families, where the
// ratio law coincides with the null and the rejection rate stays at the
// nominal level however large n grows.
PowerResult inconsistency_demo(const AlternativeModel& kotlarski_model,
                               const TestStatistic& statistic, int n, double alpha, int reps,
                               std::uint64_t seed);

}  // namespace expratio
