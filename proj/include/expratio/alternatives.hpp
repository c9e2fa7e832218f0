#pragma once

#include <cstddef>
#include <string>

#include "expratio/rng.hpp"
#include "expratio/sample.hpp"

namespace expratio {

enum class Family {
    weibull,                // (1+theta) x^theta exp(-x^{1+theta})
    gamma,                  // x^theta e^{-x} / Gamma(theta+1)
    emnw,                   // (1+theta) e^{-x} - theta beta e^{-beta x}
    verhulst,               // (1+theta) e^{-x} (1 - e^{-x})^theta
    kotlarski_inv_exp,      // x^{-2} e^{-1/x}
    kotlarski_half_cauchy,  // (1+x^2)^{-3/2}
    kotlarski_x_over_cube,  // x (1+x^2)^{-3/2}
};

// A parametric alternative to the standard exponential law. The four test
// families reduce to Exp(1) at theta = 0 and carry an analytic score
// function h(x) = d/dtheta density at theta = 0. The three Kotlarski
// families are fixed non-exponential laws whose pairwise ratio X1/X2
// nevertheless follows the F(2,2) distribution t/(1+t) -- the designed
// blind spot of ratio-based tests. They carry no theta and no score.
class AlternativeModel {
  public:
    static AlternativeModel weibull(double theta);
    static AlternativeModel gamma(double theta);
    static AlternativeModel emnw(double theta, double beta = 3.0);
    static AlternativeModel verhulst(double theta);
    static AlternativeModel kotlarski_inv_exp();
    static AlternativeModel kotlarski_half_cauchy();
    static AlternativeModel kotlarski_x_over_cube();

    Family family() const noexcept { return family_; }
    double theta() const noexcept { return theta_; }
    double beta() const noexcept { return beta_; }
    bool is_kotlarski() const noexcept;
    std::string name() const;

    double density(double x) const;
    double cdf(double x) const;

    // Inverse cdf on (0, 1). Closed form where available; EMNW and Gamma
    // invert the cdf by bisection (60 iterations, resolution far below
    // 1e-12 relative).
    double quantile(double u) const;

    // Score function h(x) = d/dtheta density(x, theta) at theta = 0.
    // Only defined for the four test families.
    double score_h(double x) const;

    // n i.i.d. draws by inverse cdf. Deterministic given the stream.
    Sample sample(std::size_t n, RngStream& rng) const;

  private:
    AlternativeModel(Family family, double theta, double beta);

    Family family_;
    double theta_;
    double beta_;
};

// Regularized lower incomplete gamma P(a, x); the Gamma family cdf.
double regularized_gamma_p(double a, double x);

}  // namespace expratio
