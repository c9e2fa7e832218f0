#include "expratio/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "expratio/parallel.hpp"
#include "expratio/rng.hpp"

namespace expratio {

namespace {

std::uint64_t null_purpose(const TestStatistic& statistic) {
    return statistic.kind == TestStatistic::Kind::w ? stream_purpose::null_w
                                                    : stream_purpose::null_d;
}

void check_mc_args(int n, int reps) {
    if (n < 2) throw std::invalid_argument("monte carlo: need n >= 2");
    if (reps < 1000) throw std::invalid_argument("monte carlo: need reps >= 1000");
}

}  // namespace

NullDistribution simulate_null(const TestStatistic& statistic, int n, int reps,
                               std::uint64_t seed) {
    check_mc_args(n, reps);
    const std::uint64_t purpose = null_purpose(statistic);

    std::vector<double> values(static_cast<std::size_t>(reps));
    detail::parallel_for(values.size(), [&](std::size_t k) {
        RngStream rng = derive_stream(seed, purpose, k);
        std::vector<double> draws(static_cast<std::size_t>(n));
        for (auto& d : draws) d = rng.next_exponential();
        values[k] = evaluate_statistic(statistic, Sample(std::move(draws)));
    });
    std::sort(values.begin(), values.end());

    return {statistic, n, std::move(values), seed, reps};
}

double critical_value(const NullDistribution& dist, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("critical_value: alpha must lie in (0, 1)");
    const std::size_t m = dist.replicates.size();
    if (m == 0) throw std::invalid_argument("critical_value: empty distribution");

    // ceil((1-alpha) m) with a nudge against floating-point excess
    // (e.g. (1-0.1)*10000 evaluating just above 9000).
    const double x = (1.0 - alpha) * static_cast<double>(m);
    auto rank = static_cast<std::size_t>(std::ceil(x - 1e-9 * std::max(1.0, x)));
    rank = std::clamp<std::size_t>(rank, 1, m);
    return dist.replicates[rank - 1];
}

double p_value(const TestStatistic& statistic, double observed, int n, int reps,
               std::uint64_t seed) {
    if (!(observed >= 0.0)) throw std::domain_error("p_value: observed must be >= 0");
    const NullDistribution dist = simulate_null(statistic, n, reps, seed);
    const auto it =
        std::lower_bound(dist.replicates.begin(), dist.replicates.end(), observed);
    const auto exceed = static_cast<double>(dist.replicates.end() - it);
    return (1.0 + exceed) / (static_cast<double>(reps) + 1.0);
}

std::vector<double> simulate_alternative(const AlternativeModel& model,
                                         const TestStatistic& statistic, int n, int reps,
                                         std::uint64_t seed) {
    check_mc_args(n, reps);
    std::vector<double> values(static_cast<std::size_t>(reps));
    detail::parallel_for(values.size(), [&](std::size_t k) {
        RngStream rng = derive_stream(seed, stream_purpose::alternative, k);
        values[k] = evaluate_statistic(statistic, model.sample(static_cast<std::size_t>(n), rng));
    });
    return values;
}

PowerResult power(const AlternativeModel& model, const TestStatistic& statistic, int n,
                  double alpha, int reps, std::uint64_t seed) {
    const NullDistribution dist = simulate_null(statistic, n, reps, seed);
    const double crit = critical_value(dist, alpha);
    const std::vector<double> alt = simulate_alternative(model, statistic, n, reps, seed);
    const auto rejected =
        std::count_if(alt.begin(), alt.end(), [crit](double v) { return v > crit; });
    return {model, statistic, n, alpha,
            static_cast<double>(rejected) / static_cast<double>(reps), reps, seed};
}

PowerResult inconsistency_demo(const AlternativeModel& kotlarski_model,
                               const TestStatistic& statistic, int n, double alpha, int reps,
                               std::uint64_t seed) {
    if (!kotlarski_model.is_kotlarski())
        throw std::domain_error("inconsistency_demo: model must be a Kotlarski family");
    return power(kotlarski_model, statistic, n, alpha, reps, seed);
}

}  // namespace expratio
