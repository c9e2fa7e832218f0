#include "expratio/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "expratio/specfun.hpp"

namespace expratio {

TestStatistic TestStatistic::w(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("TestStatistic::w: mu must be positive");
    return {Kind::w, mu};
}

double u_empirical_cdf(const Sample& sample, double t) {
    if (!(t >= 0.0)) throw std::domain_error("u_empirical_cdf: t must be nonnegative");
    const auto& x = sample.values();
    const std::size_t n = x.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && x[i] / x[j] < t) ++count;
    return static_cast<double>(count) / (static_cast<double>(n) * (n - 1));
}

double statistic_w(const Sample& sample, double mu) {
    if (!(mu > 0.0)) throw std::domain_error("statistic_w: mu must be positive");
    const auto& x = sample.values();
    const std::size_t n = x.size();
    const double centre = 1.0 - mu * std::exp(mu) * exp_integral_e1(mu);

    // Kahan-compensated sum of the pair kernel.
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = x[i] / x[j];
            const double kernel = centre - 0.5 * std::exp(-mu * r) - 0.5 * std::exp(-mu / r);
            const double y = kernel - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
    return sum / pairs;
}

std::vector<double> ratio_jump_points(const Sample& sample) {
    const auto& x = sample.values();
    const std::size_t n = x.size();
    std::vector<double> ratios;
    ratios.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) ratios.push_back(x[i] / x[j]);
    std::sort(ratios.begin(), ratios.end());
    return ratios;
}

double statistic_d(const Sample& sample) {
    const std::vector<double> ratios = ratio_jump_points(sample);
    const double total = static_cast<double>(ratios.size());

    // Between jumps t/(1+t) is strictly increasing while H_n is flat, so
    // the supremum is attained at a jump value r, from the left (H_n(r),
    // strict count) or from the right (count of ratios <= r).
    double d = 0.0;
    std::size_t below = 0;  // ratios strictly less than the current run
    std::size_t i = 0;
    while (i < ratios.size()) {
        std::size_t j = i;
        while (j < ratios.size() && ratios[j] == ratios[i]) ++j;
        const double r = ratios[i];
        const double f = r / (1.0 + r);
        const double h_left = static_cast<double>(below) / total;
        const double h_right = static_cast<double>(j) / total;
        d = std::max(d, std::max(std::abs(f - h_left), std::abs(f - h_right)));
        below = j;
        i = j;
    }
    return d;
}

double evaluate_statistic(const TestStatistic& statistic, const Sample& sample) {
    return statistic.kind == TestStatistic::Kind::w ? std::abs(statistic_w(sample, statistic.mu))
                                                    : statistic_d(sample);
}

}  // namespace expratio
