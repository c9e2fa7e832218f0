#pragma once

#include "expratio/quadrature.hpp"

namespace expratio {

// Exponential integral E1(mu) = int_1^inf e^{-mu t} / t dt, mu > 0.
// Power series for mu <= 1, continued fraction for mu > 1; both give
// roughly 1e-14 relative accuracy on the range used here.
double exp_integral_e1(double mu);

// sqrt(mu s) * K1(2 sqrt(mu s)) where K1 is the modified Bessel function
// of the second kind. Equals (1/2) int_0^inf exp(-mu s / y - y) dy, takes
// values in [0, 1/2], decreasing in s, and is exactly 1/2 at s = 0.
// Only the combined quantity is exposed; it is the numerically stable
// form near s = 0.
double bessel_k1_combo(double mu, double s);

}  // namespace expratio
