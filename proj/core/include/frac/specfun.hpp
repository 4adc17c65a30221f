#pragma once

// Scalar special functions used by the fractional operators and the
// closed-form reference extremals: Gamma, the one-parameter
// Mittag-Leffler function, and the complementary error function.
//
// All functions are pure and thread-safe.

namespace frac::specfun {

/// Gamma function for real x, x > 0 or x a negative non-integer.
/// Lanczos approximation with reflection for x < 0.5; relative error
/// below 1e-13 on [0.05, 50]. Throws DomainError at the poles
/// x = 0, -1, -2, ...
double gamma(double x);

/// log |Gamma(x)| for x > 0. Same Lanczos kernel as gamma().
double log_gamma(double x);

/// One-parameter Mittag-Leffler function
///   E_alpha(z) = sum_{k>=0} z^k / Gamma(alpha*k + 1),
/// for alpha in (0,1] and real z. Power series with term recurrence for
/// z >= -3; for z < -3 the series cancels catastrophically in double
/// precision, so the standard real-axis integral representation is
/// integrated adaptively instead. Relative error <= 1e-10 for |z| <= 30.
/// Throws DomainError for alpha outside (0,1].
double mittag_leffler(double alpha, double z);

/// Complementary error function erfc(z) = (2/sqrt(pi)) int_z^inf e^{-t^2} dt.
/// Non-alternating Maclaurin series below z = 2, Laplace continued
/// fraction above, reflection for z < 0. Relative error <= 1e-13 for |z| <= 6.
double erfc(double z);

} // namespace frac::specfun
