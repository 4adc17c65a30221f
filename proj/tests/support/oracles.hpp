#pragma once

// Independent oracles for derived test expectations. These deliberately
// avoid the production code paths: fractional operators are integrated
// from their defining integrals, the Mittag-Leffler series is summed in
// extended precision, and erfc comes from quadrature of the defining
// Gaussian integral.

#include <cmath>
#include <vector>

#include "quadrature.hpp"

namespace testsupport {

// Gamma via the defining integral Gamma(x) = int_0^inf t^{x-1} e^{-t} dt,
// with the endpoint singularity removed by t = s^{1/x} on [0,1].
inline double gamma_oracle(double x) {
  const double head =
      integrate([&](double s) { return std::exp(-std::pow(s, 1.0 / x)) / x; }, 0.0, 1.0, 1e-14);
  const double tail =
      integrate([&](double t) { return std::pow(t, x - 1.0) * std::exp(-t); }, 1.0, 60.0, 1e-14);
  return head + tail;
}

// erfc via the defining integral (2/sqrt(pi)) int_z^inf e^{-t^2} dt.
// For z >= 1 the substitution t = z + u factors out e^{-z^2}, keeping
// the integrand at O(1) scale so the absolute tolerance stays relative.
inline double erfc_oracle(double z) {
  if (z < 0.0) return 2.0 - erfc_oracle(-z);
  if (z < 1.0) {
    const double val = integrate([](double t) { return std::exp(-t * t); }, z, z + 10.0, 1e-15);
    return 2.0 / std::sqrt(M_PI) * val;
  }
  const double scaled = integrate([&](double u) { return std::exp(-u * (2.0 * z + u)); }, 0.0,
                                  40.0 / z + 4.0, 1e-15);
  return 2.0 / std::sqrt(M_PI) * std::exp(-z * z) * scaled;
}

// Mittag-Leffler series in extended precision, summed until the tail is
// below 1e-18 of the partial sum.
inline double mittag_leffler_series_oracle(double alpha, double z) {
  long double sum = 0.0L;
  long double lg_prev = 0.0L;
  long double term = 1.0L;
  for (int k = 0; k <= 20000; ++k) {
    if (k > 0) {
      const long double lg = lgammal(static_cast<long double>(alpha) * k + 1.0L);
      term *= static_cast<long double>(z) * expl(lg_prev - lg);
      lg_prev = lg;
    }
    sum += term;
    if (k > 8 && fabsl(term) < 1e-18L * fabsl(sum)) break;
  }
  return static_cast<double>(sum);
}

// Fractional operators from the definitions; f and (for the derivatives)
// f' are supplied analytically.
inline double left_rlfi_oracle(const Fn& f, double a, double alpha, double x) {
  return weakly_singular_left(f, a, x, alpha) / gamma_oracle(alpha);
}

inline double right_rlfi_oracle(const Fn& f, double b, double alpha, double x) {
  return weakly_singular_right(f, x, b, alpha) / gamma_oracle(alpha);
}

inline double left_caputo_oracle(const Fn& fprime, double a, double alpha, double x) {
  return weakly_singular_left(fprime, a, x, 1.0 - alpha) / gamma_oracle(1.0 - alpha);
}

inline double right_caputo_oracle(const Fn& fprime, double b, double alpha, double x) {
  return -weakly_singular_right(fprime, x, b, 1.0 - alpha) / gamma_oracle(1.0 - alpha);
}

// RLFD = Caputo + f(a) (x-a)^{-alpha} / Gamma(1-alpha); this is the
// analytic differentiation of the defining expression for absolutely
// continuous f.
inline double left_rlfd_oracle(const Fn& fprime, double fa, double a, double alpha, double x) {
  return left_caputo_oracle(fprime, a, alpha, x) +
         fa * std::pow(x - a, -alpha) / gamma_oracle(1.0 - alpha);
}

inline double right_rlfd_oracle(const Fn& fprime, double fb, double b, double alpha, double x) {
  return right_caputo_oracle(fprime, b, alpha, x) +
         fb * std::pow(b - x, -alpha) / gamma_oracle(1.0 - alpha);
}

// Central difference with one Richardson step: (4 D_{h/2} - D_h) / 3.
inline double derivative_oracle(const Fn& f, double x, double h = 1e-5) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

} // namespace testsupport
