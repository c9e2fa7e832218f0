#pragma once

#include <string>

#include "expratio/alternatives.hpp"
#include "expratio/statistics.hpp"

namespace expratio {

// Projection of the W kernel onto one coordinate under the null,
//   phi_mu(s) = 1 - mu e^mu E1(mu) - sqrt(mu s) K1(2 sqrt(mu s)) - s / (2(mu+s)).
// Centered: int phi_mu(s) e^{-s} ds = 0.
double projection_phi(double mu, double s);

// Projection variance of the W kernel, Delta_W^2(mu) = int phi_mu^2(s) e^{-s} ds,
// by quadrature. Positive for every mu > 0 (the kernel is non-degenerate).
double variance_delta_w(double mu);

// Projection of the D kernel family,
//   xi(s; t) = t/(1+t) - (1/2) e^{-s/t} + (1/2) e^{-s t} - 1/2,
// extended by continuity to xi(s; 0) = 0. Centered in s for every t, and
// antisymmetric under t -> 1/t.
double projection_xi(double s, double t);

// Projection variance delta^2(t) = E xi^2(X; t) under the null, in closed
// rational form; equals the quadrature of xi^2 against e^{-s}.
double variance_delta_d(double t);

// Global maximum of delta^2(t). Two maximizers exchanged by t -> 1/t;
// t_star is the smaller.
struct SupDeltaD {
    double t_star;
    double t_partner;
    double delta2;
};
SupDeltaD sup_delta_d();

// Leading coefficient of the local large-deviation rate: a^2 / (8 Delta^2)
// for W and a^2 / (8 delta^2) for D, i.e. 1/(8 Delta_W^2(mu)) resp.
// 1/(8 sup delta^2).
double large_deviation_coeff(const TestStatistic& statistic);

// Local limit coefficient of the statistic under a test family:
// b_W = 2 int phi_mu(x) h(x) dx, with h the family's score function.
double b_coeff_w(const AlternativeModel& model, double mu);

// b_D = sup_t | 2 int xi(x; t) h(x) dx |. Closed-form integrands are used
// for the Weibull, Gamma and EMNW families; Verhulst is numeric throughout.
double b_coeff_d(const AlternativeModel& model);

// Local Kullback-Leibler coefficient lim KL(theta)/theta^2 in closed form.
double kl_coeff(const AlternativeModel& model);

// KL(theta) at finite theta: inf over the scale nuisance lambda of the
// divergence from the alternative to the exponential family, the inner
// integral by quadrature and the infimum by golden-section search on
// [0.1, 10]. Cross-check oracle for kl_coeff; requires theta <= 0.2.
double kl_numeric(const AlternativeModel& model, double theta);

// Per-alternative local Bahadur efficiency record. slope = b^2 / (4 Delta^2)
// (resp. delta^2), efficiency = slope / (2 kl) <= 1.
struct EfficiencyReport {
    std::string alternative;
    double b_coeff = 0.0;
    double slope_coeff = 0.0;
    double kl_coeff = 0.0;
    double efficiency = 0.0;
};

EfficiencyReport bahadur_efficiency(const AlternativeModel& model,
                                    const TestStatistic& statistic);

// Locally asymptotically optimal perturbation family
//   g(x, theta) = e^{-x} (1 + theta q(x)),
// where q is the statistic's own projection: phi_mu for W, xi(.; t0) with
// t0 the delta^2 maximizer for D. Valid for theta in [0, theta_max], the
// bound at which the density first touches zero.
class LaoFamily {
  public:
    LaoFamily(TestStatistic statistic, double parameter, double theta_max);

    const TestStatistic& statistic() const noexcept { return statistic_; }
    double parameter() const noexcept { return parameter_; }  // mu for W, t0 for D
    double theta_max() const noexcept { return theta_max_; }

    double perturbation(double x) const;           // q(x)
    double density(double x, double theta) const;  // e^{-x} (1 + theta q(x))
    double score_h(double x) const;                // e^{-x} q(x)

  private:
    TestStatistic statistic_;
    double parameter_;
    double theta_max_;
};

LaoFamily lao_alternative(const TestStatistic& statistic);

// Efficiency of an LAO family, with the KL coefficient computed from the
// score via (1/2) [ int h^2 e^x - (int x h)^2 ]; lands at 1 up to
// quadrature error.
EfficiencyReport bahadur_efficiency(const LaoFamily& family);

}  // namespace expratio
