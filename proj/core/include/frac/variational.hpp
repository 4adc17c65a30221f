#pragma once

// Optimality conditions of combined-Caputo variational problems,
// evaluated as residuals on candidate paths: functional value, first
// variation, Euler-Lagrange system, transversality, isoperimetric
// constraint values, regularity rank, and complementary slackness.

#include <optional>
#include <vector>

#include "frac/fracops.hpp"
#include "frac/grid.hpp"
#include "frac/lagrangian.hpp"

namespace frac::var {

/// Right-endpoint regime of one component.
struct RightBoundary {
  enum class Kind { Fixed, Free, Capped };
  Kind kind = Kind::Fixed;
  double value = 0.0; // fixed value or cap; unused for Free

  static RightBoundary fixed(double v) { return {Kind::Fixed, v}; }
  static RightBoundary free() { return {Kind::Free, 0.0}; }
  static RightBoundary capped(double v) { return {Kind::Capped, v}; }
  bool operator==(const RightBoundary&) const = default;
};

/// y(a) fully fixed; at most one right component free or capped.
struct BoundaryConditions {
  std::vector<double> left;
  std::vector<RightBoundary> right;

  /// 0-based index of the free/capped component, or -1 if all fixed.
  int non_fixed_component() const;
  bool operator==(const BoundaryConditions&) const = default;
};

struct Constraint {
  enum class Kind { Equality, Inequality };
  expr::LagrangianExpr integrand; // G^j
  double target = 0.0;            // xi_j
  Kind kind = Kind::Equality;
};

/// Reporting convention for multipliers: equality constraints carry the
/// coefficient lambda_j of F = L - sum lambda_j G^j; inequality
/// constraints carry the KKT multiplier of G^j <= xi_j, which is
/// non-negative and enters F with the opposite sign.
struct MultiplierSet {
  std::vector<double> lambda;
};

struct ProblemSpec {
  int components = 1;
  expr::LagrangianExpr lagrangian;
  ops::FractionalParams params{0.5, 0.5, 1.0};
  Grid grid{0.0, 1.0, 2};
  BoundaryConditions bc;
  std::vector<Constraint> constraints;

  void validate() const; // throws invalid_argument on inconsistency
  bool has_fractional_dependence() const;
};

/// The sampled argument bracket of the integrands: y itself, its
/// summation-by-parts first derivative, and the combined Caputo
/// derivative.
struct PathJet {
  SampledPath y;
  SampledPath dy;
  SampledPath Dy;
};

struct TransversalityReport {
  double value = 0.0;   // the bracket evaluated at x = b
  bool capped = false;  // capped regime: value <= 0 required instead of = 0
  double cap_slack = 0; // cap - y_l(b); equality branch applies when > tol
  int component = 0;    // 0-based l
};

/// Residual bundle. Euler-Lagrange values are kept on the interior
/// assertion window [ceil(n/20), floor(19n/20)] only; the dual operator
/// is singular at the endpoints, where pointwise assertions are
/// meaningless.
struct Residual {
  int window_begin = 0;
  int window_end = 0;
  std::vector<std::vector<double>> el; // per component, window values
  std::optional<TransversalityReport> transversality;
  std::vector<double> constraint_violation; // G^j(y) - xi_j
  std::vector<double> slackness;            // lambda_j * (xi_j - G^j)

  double max_el() const;
};

PathJet path_jet(const ProblemSpec& problem, const SampledPath& y);

/// Trapezoid quadrature of the Lagrangian along the jet. Expression
/// domain errors are rethrown with the offending node index.
double functional_value(const ProblemSpec& problem, const SampledPath& y);

/// Gateaux derivative d/de J(y + e h) at e = 0, evaluated analytically
/// from the sampled partials. h must vanish at x = a and at every fixed
/// right endpoint.
double first_variation(const ProblemSpec& problem, const SampledPath& y, const SampledPath& h);

/// Same, for an arbitrary integrand (used for constraint functionals).
double first_variation(const ProblemSpec& problem, const expr::LagrangianExpr& integrand,
                       const SampledPath& y, const SampledPath& h);

/// Node-wise Euler-Lagrange residual of F = L - sum lambda~_j G^j on the
/// interior window (lambda~ is the sign-adjusted multiplier, see
/// MultiplierSet). Multipliers must be present exactly when constraints
/// are. The returned bundle also carries constraint violations,
/// slackness products, and the transversality report when the boundary
/// has a non-fixed component.
Residual el_residual(const ProblemSpec& problem, const SampledPath& y,
                     const std::optional<MultiplierSet>& multipliers = std::nullopt);

/// The natural-boundary bracket at x = b for the non-fixed component.
TransversalityReport transversality_residual(const ProblemSpec& problem, const SampledPath& y);

/// Trapezoid values of each constraint functional along the jet.
std::vector<double> constraint_values(const ProblemSpec& problem, const SampledPath& y);

/// Numerical rank (singular values above 1e-8 of the largest) of the
/// matrix a_kl = delta G^k(y; h^l) over the supplied admissible
/// directions.
int check_regularity(const ProblemSpec& problem, const SampledPath& y,
                     const std::vector<SampledPath>& directions);

/// lambda_j * (xi_j - G^j(y)) for every constraint; requires at least
/// one inequality constraint (the products are the integrated form of
/// the complementary-slackness condition).
std::vector<double> slackness_check(const ProblemSpec& problem, const SampledPath& y,
                                    const MultiplierSet& multipliers);

/// max ||y|| + max ||y'|| + max ||Dy|| over the nodes (Euclidean norm
/// across components).
double norm_1_infty(const ProblemSpec& problem, const SampledPath& y);

} // namespace frac::var
