#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expratio {

// Accuracy request for the adaptive integrator.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = 2000;
};

// Thrown when the subdivision budget runs out before the requested
// tolerance is met. Carries the best estimate so far and a bound on
// its error.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(std::string what, double best_estimate, double error_bound)
        : std::runtime_error(std::move(what)),
          best_estimate_(best_estimate),
          error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double best_estimate_;
    double error_bound_;
};

namespace detail {

// Gauss 7 / Kronrod 15 rule on [a, b]. Returns the K15 value and an
// error estimate from the G7/K15 discrepancy (QUADPACK-style rescaling).
// Nodes are interior, so integrable endpoint singularities are never
// evaluated directly.
template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
    // abscissa, Gauss-7 weight, Kronrod-15 weight
    static constexpr double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double g7 = nw[0][1] * f0;
    double k15 = nw[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nw[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += nw[i][1] * fi;
        k15 += nw[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;

    double err = 200.0 * std::abs(k15 - g7);
    if (err < 1.0) err *= std::sqrt(err);
    return {k15, err};
}

struct Segment {
    double a, b, value, error;
};

}  // namespace detail

// Adaptive integration of f over (a, b), b finite. Worst-segment-first
// bisection until the summed error bound meets tol. Deterministic for a
// fixed integrand and tolerance.
template <class F>
double integrate_adaptive_finite(F&& f, double a, double b, const Tolerance& tol = {}) {
    if (!(tol.abs_tol > 0) || !(tol.rel_tol > 0) || tol.max_subdivisions < 1)
        throw std::invalid_argument("integrate_adaptive: invalid tolerance");
    if (a == b) return 0.0;

    std::vector<detail::Segment> segs;
    segs.reserve(64);
    auto [v0, e0] = detail::gauss_kronrod_15(f, a, b);
    segs.push_back({a, b, v0, e0});

    for (std::size_t iter = 0; iter < tol.max_subdivisions; ++iter) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        if (err <= tol.abs_tol || err <= tol.rel_tol * std::abs(total)) return total;

        const detail::Segment s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) {
            // interval no longer bisectable in double precision
            return total;
        }
        auto [vl, el] = detail::gauss_kronrod_15(f, s.a, m);
        auto [vr, er] = detail::gauss_kronrod_15(f, m, s.b);
        segs[worst] = {s.a, m, vl, el};
        segs.push_back({m, s.b, vr, er});
    }

    double total = 0.0, err = 0.0;
    for (const auto& s : segs) {
        total += s.value;
        err += s.error;
    }
    throw convergence_error("integrate_adaptive: subdivision budget exhausted", total, err);
}

// Integration of f over (a, b); pass b = +infinity for a semi-infinite
// range, which is mapped onto (0, 1) by x = a + u/(1-u). The integrand
// must decay fast enough that the transformed integrand is integrable
// (exponential decay in all uses here).
template <class F>
double integrate_adaptive(F&& f, double a, double b, const Tolerance& tol = {}) {
    if (std::isinf(b)) {
        auto g = [&f, a](double u) {
            const double om = 1.0 - u;
            const double x = a + u / om;
            return f(x) / (om * om);
        };
        return integrate_adaptive_finite(g, 0.0, 1.0, tol);
    }
    return integrate_adaptive_finite(f, a, b, tol);
}

}  // namespace expratio
