#pragma once

#include "muhs/types.hpp"

namespace muhs {

// Gamma function for complex argument (Lanczos approximation, g = 7).
// Accurate to ~1e-13 relative on the strips used here.
cplx gamma_cplx(cplx z);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a) for
// complex a with Re a > 0 and real x >= 0.  Power series for
// x < Re(a) + 1, continued fraction for the complementary part otherwise;
// both iterated to ~1e-15 term ratio.
cplx lower_gamma_regularized(cplx a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
// directly by the continued fraction for x >= Re(a) + 1 so that small
// values carry full relative accuracy.
cplx upper_gamma_regularized(cplx a, double x);

// Lower incomplete gamma itself, gamma(a, x) = P(a, x) * Gamma(a).
cplx lower_gamma(cplx a, double x);

// Principal-branch complex power exp(mu * Log(base)).  The argument of
// `base` must lie in the open right half-plane, where the principal
// logarithm has imaginary part in (-pi/2, pi/2).
cplx complex_power(cplx base, cplx mu);

} // namespace muhs
