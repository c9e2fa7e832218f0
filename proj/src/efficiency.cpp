#include "expratio/efficiency.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "expratio/quadrature.hpp"
#include "expratio/specfun.hpp"

namespace expratio {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerance for the efficiency integrals; tight enough that assembled
// efficiencies are good to ~1e-8.
const Tolerance kQuadTol{1e-10, 1e-10, 2000};

double integral(const std::function<double(double)>& f) {
    return integrate_adaptive(f, 0.0, kInf, kQuadTol);
}

// Golden-section maximization of f on [lo, hi].
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 90 && (b - a) > 1e-14 * (std::abs(a) + std::abs(b)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// Maximum of f over t in [1e-3, 1e3]: 2001-point logarithmic grid scan
// followed by golden-section refinement on the bracketing interval. Every
// t-function in this module is smooth with at most two maxima exchanged
// by t -> 1/t, so the grid cannot miss the global one.
std::pair<double, double> maximize_over_t(const std::function<double(double)>& f) {
    constexpr int points = 2001;
    double best_t = 1e-3, best_v = -kInf;
    int best_i = 0;
    for (int i = 0; i < points; ++i) {
        const double t = std::pow(10.0, -3.0 + 6.0 * i / (points - 1));
        const double v = f(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
            best_i = i;
        }
    }
    const double lo = std::pow(10.0, -3.0 + 6.0 * std::max(0, best_i - 1) / (points - 1.0));
    const double hi =
        std::pow(10.0, -3.0 + 6.0 * std::min(points - 1, best_i + 1) / (points - 1.0));
    auto [t, v] = golden_max(f, lo, hi);
    if (v >= best_v) return {t, v};
    return {best_t, best_v};
}

double xi_score_integral(const std::function<double(double)>& h, double t) {
    return 2.0 * integral([&h, t](double x) { return projection_xi(x, t) * h(x); });
}

// sup_t |2 int xi(x;t) h(x) dx| evaluated numerically.
double b_coeff_d_numeric(const std::function<double(double)>& h) {
    auto [t, v] = maximize_over_t([&h](double t) { return std::abs(xi_score_integral(h, t)); });
    (void)t;
    return v;
}

// Closed-form b_D(t)/theta integrands where available.
double b_d_curve(const AlternativeModel& model, double t) {
    switch (model.family()) {
        case Family::weibull:
            return -t * std::log(t) / ((t + 1.0) * (t + 1.0));
        case Family::gamma:
            return ((t - 1.0) * std::log(t + 1.0) - t * std::log(t)) / (t + 1.0);
        case Family::emnw: {
            // sign fixed to match the defining integral 2 int xi h; the
            // supremum of the absolute value is unaffected
            const double b = model.beta();
            return (b - 1.0) * (b - 1.0) * t * (1.0 - t) /
                   ((t + 1.0) * (b + t) * (t * b + 1.0));
        }
        default:
            throw std::domain_error("b_d_curve: no closed form");
    }
}

void require_score(const AlternativeModel& model, const char* who) {
    if (model.is_kotlarski())
        throw std::domain_error(std::string(who) + ": Kotlarski families have no score");
}

}  // namespace

double projection_phi(double mu, double s) {
    if (!(mu > 0.0)) throw std::domain_error("projection_phi: mu must be positive");
    if (!(s >= 0.0)) throw std::domain_error("projection_phi: s must be nonnegative");
    const double centre = 1.0 - mu * std::exp(mu) * exp_integral_e1(mu);
    return centre - bessel_k1_combo(mu, s) - s / (2.0 * (mu + s));
}

double variance_delta_w(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("variance_delta_w: mu must be positive");
    const double centre = 1.0 - mu * std::exp(mu) * exp_integral_e1(mu);
    return integral([mu, centre](double s) {
        const double p = centre - bessel_k1_combo(mu, s) - s / (2.0 * (mu + s));
        return p * p * std::exp(-s);
    });
}

double projection_xi(double s, double t) {
    if (!(s >= 0.0)) throw std::domain_error("projection_xi: s must be nonnegative");
    if (!(t >= 0.0)) throw std::domain_error("projection_xi: t must be nonnegative");
    if (t == 0.0) return 0.0;
    return t / (1.0 + t) - 0.5 * std::exp(-s / t) + 0.5 * std::exp(-s * t) - 0.5;
}

double variance_delta_d(double t) {
    if (!(t > 0.0)) throw std::domain_error("variance_delta_d: t must be positive");
    const double tp1 = t + 1.0;
    const double num = t * (t - 1.0) * (t - 1.0) * (t * t + 3.0 * t + 1.0);
    const double den = 4.0 * tp1 * tp1 * (t + 2.0) * (t * t * t + tp1 * tp1 * tp1);
    return num / den;
}

SupDeltaD sup_delta_d() {
    auto [t, v] = maximize_over_t(variance_delta_d);
    if (t > 1.0) t = 1.0 / t;  // report the smaller of the symmetric pair
    return {t, 1.0 / t, variance_delta_d(t)};
}

double large_deviation_coeff(const TestStatistic& statistic) {
    if (statistic.kind == TestStatistic::Kind::w)
        return 1.0 / (8.0 * variance_delta_w(statistic.mu));
    return 1.0 / (8.0 * sup_delta_d().delta2);
}

double b_coeff_w(const AlternativeModel& model, double mu) {
    require_score(model, "b_coeff_w");
    return 2.0 *
           integral([&model, mu](double x) { return projection_phi(mu, x) * model.score_h(x); });
}

double b_coeff_d(const AlternativeModel& model) {
    require_score(model, "b_coeff_d");
    if (model.family() == Family::verhulst) {
        return b_coeff_d_numeric([&model](double x) { return model.score_h(x); });
    }
    auto [t, v] =
        maximize_over_t([&model](double t) { return std::abs(b_d_curve(model, t)); });
    (void)t;
    return v;
}

double kl_coeff(const AlternativeModel& model) {
    constexpr double pi = 3.14159265358979323846;
    switch (model.family()) {
        case Family::weibull:
            return pi * pi / 12.0;
        case Family::gamma:
            return pi * pi / 12.0 - 0.5;
        case Family::emnw: {
            const double b = model.beta();
            return std::pow(b - 1.0, 4) / (2.0 * b * b * (2.0 * b - 1.0));
        }
        case Family::verhulst:
            return pi * pi / 6.0 - std::pow(pi, 4) / 72.0;
        default:
            throw std::domain_error("kl_coeff: Kotlarski families have no local coefficient");
    }
}

double kl_numeric(const AlternativeModel& model, double theta) {
    require_score(model, "kl_numeric");
    if (!(theta >= 0.0 && theta <= 0.2))
        throw std::domain_error("kl_numeric: theta must lie in [0, 0.2]");

    AlternativeModel g = model;
    switch (model.family()) {
        case Family::weibull: g = AlternativeModel::weibull(theta); break;
        case Family::gamma: g = AlternativeModel::gamma(theta); break;
        case Family::emnw: g = AlternativeModel::emnw(theta, model.beta()); break;
        case Family::verhulst: g = AlternativeModel::verhulst(theta); break;
        default: break;
    }

    // int g ln(g / (lambda e^{-lambda x})) dx = A + lambda m - ln lambda,
    // with A = int g ln g and m the mean of g.
    const double entropy_term = integral([&g](double x) {
        const double d = g.density(x);
        return d > 0.0 ? d * std::log(d) : 0.0;
    });
    const double mean = integral([&g](double x) { return x * g.density(x); });

    auto [lambda, neg] = golden_max(
        [entropy_term, mean](double l) { return -(entropy_term + l * mean - std::log(l)); }, 0.1,
        10.0);
    (void)lambda;
    return -neg;
}

EfficiencyReport bahadur_efficiency(const AlternativeModel& model,
                                    const TestStatistic& statistic) {
    require_score(model, "bahadur_efficiency");
    double b, variance;
    if (statistic.kind == TestStatistic::Kind::w) {
        b = b_coeff_w(model, statistic.mu);
        variance = variance_delta_w(statistic.mu);
    } else {
        b = b_coeff_d(model);
        variance = sup_delta_d().delta2;
    }
    const double slope = b * b / (4.0 * variance);
    const double kl = kl_coeff(model);
    return {model.name(), b, slope, kl, slope / (2.0 * kl)};
}

LaoFamily::LaoFamily(TestStatistic statistic, double parameter, double theta_max)
    : statistic_(statistic), parameter_(parameter), theta_max_(theta_max) {}

double LaoFamily::perturbation(double x) const {
    return statistic_.kind == TestStatistic::Kind::w ? projection_phi(parameter_, x)
                                                     : projection_xi(x, parameter_);
}

double LaoFamily::density(double x, double theta) const {
    if (!(x >= 0.0)) throw std::domain_error("LaoFamily::density: x must be nonnegative");
    if (!(theta >= 0.0 && theta <= theta_max_))
        throw std::domain_error("LaoFamily::density: theta outside [0, theta_max]");
    return std::exp(-x) * (1.0 + theta * perturbation(x));
}

double LaoFamily::score_h(double x) const { return std::exp(-x) * perturbation(x); }

LaoFamily lao_alternative(const TestStatistic& statistic) {
    const double parameter = statistic.kind == TestStatistic::Kind::w
                                 ? statistic.mu
                                 : sup_delta_d().t_star;

    // theta_max = -1 / inf q: grid scan of the perturbation plus its limit
    // at infinity (q is continuous with a finite limit).
    LaoFamily probe(statistic, parameter, kInf);
    double min_q = kInf;
    double min_x = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double x = 80.0 * i / 4000.0;
        const double q = probe.perturbation(x);
        if (q < min_q) {
            min_q = q;
            min_x = x;
        }
    }
    auto [x_ref, neg_ref] = golden_max(
        [&probe](double x) { return -probe.perturbation(x); }, std::max(0.0, min_x - 0.05),
        min_x + 0.05);
    (void)x_ref;
    min_q = std::min(min_q, -neg_ref);

    const double q_inf = statistic.kind == TestStatistic::Kind::w
                             ? 0.5 - statistic.mu * std::exp(statistic.mu) *
                                         exp_integral_e1(statistic.mu)
                             : parameter / (1.0 + parameter) - 0.5;
    min_q = std::min(min_q, q_inf);

    const double theta_max = min_q < 0.0 ? -1.0 / min_q : kInf;
    return {statistic, parameter, theta_max};
}

EfficiencyReport bahadur_efficiency(const LaoFamily& family) {
    const auto h = [&family](double x) { return family.score_h(x); };

    double b, variance;
    if (family.statistic().kind == TestStatistic::Kind::w) {
        b = 2.0 * integral(
                      [&](double x) { return projection_phi(family.parameter(), x) * h(x); });
        variance = variance_delta_w(family.parameter());
    } else {
        b = b_coeff_d_numeric(h);
        variance = sup_delta_d().delta2;
    }
    const double slope = b * b / (4.0 * variance);

    // KL coefficient from the score: (1/2) [ int h^2 e^x - (int x h)^2 ].
    // With h = e^{-x} q the first integrand reduces to e^{-x} q^2, which
    // stays finite where h^2 e^x would hit 0 * inf in double precision.
    const double h2 = integral([&family](double x) {
        const double q = family.perturbation(x);
        return std::exp(-x) * q * q;
    });
    const double xh = integral([&h](double x) { return x * h(x); });
    const double kl = 0.5 * (h2 - xh * xh);

    char id[48];
    std::snprintf(id, sizeof id,
                  family.statistic().kind == TestStatistic::Kind::w ? "lao-w(mu=%g)"
                                                                    : "lao-d(t0=%.4f)",
                  family.parameter());
    return {id, b, slope, kl, slope / (2.0 * kl)};
}

}  // namespace expratio
