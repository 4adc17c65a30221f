#pragma once

// Direct method for the variational problems: interior node values
// (plus a free or capped right endpoint) are the decision variables,
// the discretized functional is minimized by limited-memory
// quasi-Newton descent, and isoperimetric constraints are handled by a
// safeguarded augmented-Lagrangian outer loop. The Euler-Lagrange
// residual of the returned path is the independent certificate.

#include <functional>

#include "frac/variational.hpp"

namespace frac::solver {

struct SolveOptions {
  /// Inner quasi-Newton iteration budget (per augmented-Lagrangian
  /// round for constrained solves).
  int max_iterations = 5000;
  /// Projected max-norm gradient target. 0 picks the default:
  /// 1e-8 for classical problems, 1e-6 when any integrand depends on a
  /// fractional derivative.
  double gradient_tolerance = 0.0;
  double constraint_tolerance = 1e-8;
  double penalty_initial = 10.0;
  double penalty_growth = 10.0;
  /// Nonzero: perturb the interior of the initial guess by seeded
  /// uniform noise of magnitude 1e-3 (flat-direction detection).
  unsigned seed = 0;
  /// Optional trace callback: iteration, objective, gradient norm.
  std::function<void(int, double, double)> on_iteration;
};

struct SolveReport {
  SampledPath path;
  var::MultiplierSet multipliers; // empty when the problem has no constraints
  double objective = 0.0;         // functional value at `path` (no penalty terms)
  var::Residual residual;
  int iterations = 0;
  bool converged = false;
};

/// Exact gradient of the discretized functional with respect to every
/// node value, assembled by transposing the trapezoid weights, the
/// derivative stencil and the L1 operator weights against the sampled
/// integrand partials. Entries at fixed boundary nodes are zeroed, so
/// the result is the gradient over the decision variables in path shape.
SampledPath discrete_gradient(const var::ProblemSpec& problem, const SampledPath& y);

/// Fixed boundary values on both sides, no constraints.
SolveReport solve_basic(const var::ProblemSpec& problem, const SolveOptions& options = {});

/// One free or capped right-endpoint component, no constraints. The
/// endpoint joins the decision vector; a cap is enforced by projection.
SolveReport solve_free_endpoint(const var::ProblemSpec& problem, const SolveOptions& options = {});

/// Isoperimetric constraints (equality and/or inequality). Equality
/// multipliers follow lambda <- lambda - rho * violation; inequality
/// multipliers are kept non-negative by clamping. The report carries
/// recovered multipliers in the MultiplierSet reporting convention.
SolveReport solve_isoperimetric(const var::ProblemSpec& problem, const SolveOptions& options = {});

} // namespace frac::solver
