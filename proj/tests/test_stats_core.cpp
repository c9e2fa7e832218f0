#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "expratio/specfun.hpp"
#include "expratio/statistics.hpp"
#include "test_util.hpp"

using namespace expratio;

TEST_CASE("Sample: validation") {
    CHECK_THROWS_AS(Sample({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, testutil::kInf}), std::invalid_argument);
    CHECK_NOTHROW(Sample({1.0, 1.0}));  // ties allowed
}

TEST_CASE("u_empirical_cdf: strict indicator pins tie behaviour") {
    const Sample ones({1.0, 1.0});
    CHECK(u_empirical_cdf(ones, 1.0) == 0.0);
    CHECK(u_empirical_cdf(ones, 1.5) == 1.0);

    const Sample s({1.0, 2.0});
    CHECK(u_empirical_cdf(s, 0.7) == 0.5);  // ratios {0.5, 2}

    CHECK(u_empirical_cdf(s, 0.0) == 0.0);
    CHECK(u_empirical_cdf(s, 1e9) == 1.0);
    CHECK_THROWS_AS(u_empirical_cdf(s, -0.1), std::domain_error);
}

TEST_CASE("u_empirical_cdf: nondecreasing step function") {
    RngStream rng(7);
    const Sample s = testutil::random_sample(rng, 9);
    double prev = 0.0;
    for (double t = 0.0; t < 30.0; t += 0.05) {
        const double h = u_empirical_cdf(s, t);
        CHECK(h >= prev);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
        prev = h;
    }
}

TEST_CASE("ratio_jump_points: enumeration") {
    CHECK(ratio_jump_points(Sample({1.0, 2.0})) == std::vector<double>{0.5, 2.0});
    CHECK(ratio_jump_points(Sample({1.0, 1.0, 1.0})) ==
          std::vector<double>(6, 1.0));
    CHECK(ratio_jump_points(Sample({1.0, 2.0, 4.0})) ==
          std::vector<double>{0.25, 0.5, 0.5, 2.0, 2.0, 4.0});
}

TEST_CASE("ratio_jump_points: multiset closed under r -> 1/r") {
    RngStream rng(11);
    const Sample s = testutil::random_sample(rng, 8);
    auto jumps = ratio_jump_points(s);
    std::vector<double> inverted(jumps.size());
    for (std::size_t i = 0; i < jumps.size(); ++i) inverted[i] = 1.0 / jumps[i];
    std::sort(inverted.begin(), inverted.end());
    for (std::size_t i = 0; i < jumps.size(); ++i)
        CHECK(jumps[i] == doctest::Approx(inverted[i]).epsilon(1e-12));
}

TEST_CASE("statistic_w: constant sample has the closed-form kernel value") {
    for (double mu : {0.5, 2.0, 4.0}) {
        const double expected =
            1.0 - mu * std::exp(mu) * exp_integral_e1(mu) - std::exp(-mu);
        for (double c : {1.0, 0.037, 92.4}) {
            CHECK(statistic_w(Sample({c, c}), mu) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
    // frozen value at mu = 2: 1 - 2 e^2 E1(2) - e^{-2}
    CHECK(statistic_w(Sample({3.0, 3.0}), 2.0) ==
          doctest::Approx(0.14200748298694214).epsilon(1e-10));
}

TEST_CASE("statistic_w: equals the weighted-integral form") {
    RngStream rng(101);
    for (int rep = 0; rep < 50; ++rep) {
        const Sample s = testutil::random_sample(rng, 10);
        const double via_kernel = statistic_w(s, 2.0);
        const double via_integral = testutil::w_quadrature_oracle(ratio_jump_points(s), 2.0);
        CHECK(std::abs(via_kernel - via_integral) < 1e-8);
    }
}

TEST_CASE("statistic_w and statistic_d: scale invariance") {
    RngStream rng(202);
    for (int rep = 0; rep < 100; ++rep) {
        const Sample s = testutil::random_sample(rng, 12);
        const double w = statistic_w(s, 2.0);
        const double d = statistic_d(s);
        for (int k = 0; k < 5; ++k) {
            const double c = std::exp(3.0 * (rng.next_uniform() - 0.5));
            std::vector<double> scaled = s.values();
            for (auto& x : scaled) x *= c;
            const Sample sc(std::move(scaled));
            CHECK(std::abs(statistic_w(sc, 2.0) - w) < 1e-12);
            CHECK(std::abs(statistic_d(sc) - d) < 1e-12);
        }
    }
    // a fixed non-random case: X vs 7.3 X
    const Sample base({0.4, 1.7, 2.2, 0.9, 5.1});
    std::vector<double> scaled = base.values();
    for (auto& x : scaled) x *= 7.3;
    CHECK(std::abs(statistic_w(Sample(scaled), 2.0) - statistic_w(base, 2.0)) < 1e-12);
    CHECK(std::abs(statistic_d(Sample(scaled)) - statistic_d(base)) < 1e-12);
}

TEST_CASE("statistic_d: constant sample gives exactly 1/2") {
    for (double c : {1.0, 0.01, 123.0}) {
        CHECK(statistic_d(Sample({c, c})) == doctest::Approx(0.5).epsilon(1e-15));
    }
}

TEST_CASE("statistic_d: matches dense-grid brute force") {
    RngStream rng(303);
    for (int rep = 0; rep < 8; ++rep) {
        const Sample s = testutil::random_sample(rng, 8);
        const double exact = statistic_d(s);
        const double brute = testutil::d_bruteforce_oracle(ratio_jump_points(s));
        CHECK(std::abs(exact - brute) < 1e-12);
    }
}

TEST_CASE("statistic_d: bounds") {
    RngStream rng(404);
    for (int rep = 0; rep < 60; ++rep) {
        const Sample s = testutil::random_sample(rng, 2 + static_cast<std::size_t>(
                                                          rng.next_uniform() * 12));
        const double d = statistic_d(s);
        CHECK(d > 0.0);  // a step function cannot match t/(1+t) everywhere
        CHECK(d <= 1.0);
    }
}

TEST_CASE("evaluate_statistic dispatches to |W| and D") {
    const Sample s({0.5, 1.0, 4.0});
    CHECK(evaluate_statistic(TestStatistic::w(2.0), s) ==
          doctest::Approx(std::abs(statistic_w(s, 2.0))).epsilon(1e-15));
    CHECK(evaluate_statistic(TestStatistic::d(), s) ==
          doctest::Approx(statistic_d(s)).epsilon(1e-15));
    CHECK_THROWS_AS(TestStatistic::w(0.0), std::domain_error);
}
