#pragma once

// Discretized fractional operators on sampled functions.
//
// Left-sided operators are implemented directly; every right-sided
// operator is evaluated as the node-reversal of its left counterpart
// applied to the node-reversed input, which is an exact identity of the
// definitions (the built-in minus sign of the right derivatives is
// absorbed by the reversal of d/dt), so reflection duality holds to the
// last bit. All operators are linear, act component-wise, and return
// full node vectors.

#include "frac/grid.hpp"

namespace frac::ops {

/// Orders and mixing weight of the combined Caputo derivative
/// gamma * leftCaputo(alpha) + (1-gamma) * rightCaputo(beta).
struct FractionalParams {
  FractionalParams(double alpha, double beta, double gamma);
  double alpha;
  double beta;
  double gamma;
};

/// Left Riemann-Liouville integral of order alpha in (0,1]:
/// (1/Gamma(alpha)) int_a^x (x-t)^{alpha-1} f(t) dt at every node,
/// by the product-trapezoidal rule (piecewise-linear f, exact kernel
/// moments per cell). Node 0 is the empty integral, 0.
SampledPath left_rlfi(const SampledPath& f, double alpha);
SampledPath right_rlfi(const SampledPath& f, double alpha);

/// Left Caputo derivative of order alpha in (0,1) by the L1 scheme:
/// (1/Gamma(1-alpha)) int_a^x (x-t)^{-alpha} f'(t) dt with f piecewise
/// linear. Node 0 is defined as 0 (empty integral). Requires n >= 4.
SampledPath left_caputo(const SampledPath& f, double alpha);
SampledPath right_caputo(const SampledPath& f, double alpha);

/// Left Riemann-Liouville derivative of order alpha in (0,1):
/// d/dx of the (1-alpha)-order integral, differentiated with
/// second-order finite differences (one-sided at the endpoints).
/// Endpoint values of non-vanishing f blow up like (x-a)^{-alpha};
/// they are reported but not meaningful. Requires n >= 4.
SampledPath left_rlfd(const SampledPath& f, double alpha);
SampledPath right_rlfd(const SampledPath& f, double alpha);

/// gamma * leftCaputo(alpha) + (1-gamma) * rightCaputo(beta), component-wise.
/// gamma = 1 and gamma = 0 take the one-sided code path unchanged.
SampledPath combined_caputo(const SampledPath& f, const FractionalParams& p);

/// Dual Riemann-Liouville combination arising from integration by parts:
/// (1-gamma) * leftRLFD(beta) + gamma * rightRLFD(alpha).
SampledPath dual_combined_rl(const SampledPath& g, const FractionalParams& p);

/// |int g * leftRLFI(f) - int f * rightRLFI(g)| with trapezoidal outer
/// quadrature; vanishes under grid refinement. Single-component paths
/// on the same grid.
double check_rlfi_parts(const SampledPath& f, const SampledPath& g, double alpha);

struct PartsCheck {
  double residual;      // |LHS - RHS_integral - RHS_boundary|
  double boundary_term; // the evaluated boundary bracket
};

/// Integration by parts for the combined derivative:
///   int g * combined(f) = int f * dual(g)
///     + [gamma f * rightRLFI(g,1-alpha) - (1-gamma) f * leftRLFI(g,1-beta)]_a^b.
PartsCheck check_combined_parts(const SampledPath& f, const SampledPath& g,
                                const FractionalParams& p);

/// First derivative with centered interior stencil and second-order
/// one-sided closures. Used inside the RL derivatives and for the
/// total-derivative term of the Euler-Lagrange residual.
SampledPath fd_derivative(const SampledPath& f);

/// First derivative with centered interior stencil and first-order
/// one-sided closures. Together with the trapezoid weights this pair
/// satisfies summation by parts, so discrete functionals built from it
/// telescope exactly; it is the derivative used in path jets.
SampledPath sbp_derivative(const SampledPath& f);

/// Trapezoid quadrature of a single-component path.
double trapezoid(const SampledPath& f);

} // namespace frac::ops
