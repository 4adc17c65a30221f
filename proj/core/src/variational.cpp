#include "frac/variational.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

#include "frac/errors.hpp"

namespace frac::var {
namespace {

using expr::LagrangianExpr;
using expr::NodeKind;
using expr::Variable;

// Sign-adjusted multiplier coefficients of F = L - sum lambda~_j G^j:
// equality constraints use the stored lambda, inequality constraints
// store the non-negative KKT multiplier of G <= xi, which enters F as
// -mu (the slack-function construction attaches it with a plus sign to
// the augmented integrand).
std::vector<double> effective_multipliers(const ProblemSpec& problem, const MultiplierSet& m) {
  if (m.lambda.size() != problem.constraints.size())
    throw std::invalid_argument("multiplier count does not match constraint count");
  std::vector<double> out(m.lambda.size());
  for (std::size_t j = 0; j < m.lambda.size(); ++j)
    out[j] = problem.constraints[j].kind == Constraint::Kind::Equality ? m.lambda[j] : -m.lambda[j];
  return out;
}

// Evaluates an expression at every node of a jet.
std::vector<double> sample_along(const LagrangianExpr& e, const PathJet& jet) {
  const int n = jet.y.grid().n;
  const int N = jet.y.components();
  std::vector<double> ybuf(static_cast<std::size_t>(N)), dybuf(static_cast<std::size_t>(N)),
      Dbuf(static_cast<std::size_t>(N));
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < N; ++i) {
      ybuf[static_cast<std::size_t>(i)] = jet.y(i, k);
      dybuf[static_cast<std::size_t>(i)] = jet.dy(i, k);
      Dbuf[static_cast<std::size_t>(i)] = jet.Dy(i, k);
    }
    expr::PointBinding at{jet.y.grid().node(k), ybuf, dybuf, Dbuf};
    try {
      out[static_cast<std::size_t>(k)] = expr::eval(e, at);
    } catch (const expr::EvalError& err) {
      throw expr::EvalError(err.offset, std::string(err.what()) + " at node " +
                                            std::to_string(k) + " (x = " +
                                            std::to_string(at.x) + ")");
    }
  }
  return out;
}

std::vector<double> linear_combination(const PathJet& jet, const LagrangianExpr& lagr,
                                       const std::vector<Constraint>& constraints,
                                       const std::vector<double>& coeffs, const Variable& var) {
  std::vector<double> samples = sample_along(expr::diff(lagr, var), jet);
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    if (coeffs[j] == 0.0) continue;
    const auto gs = sample_along(expr::diff(constraints[j].integrand, var), jet);
    for (std::size_t k = 0; k < samples.size(); ++k) samples[k] -= coeffs[j] * gs[k];
  }
  return samples;
}

void require_path_shape(const ProblemSpec& problem, const SampledPath& y, const char* what) {
  if (!(y.grid() == problem.grid))
    throw GridMismatchError(std::string(what) + ": path grid does not match the problem grid");
  if (y.components() != problem.components)
    throw std::invalid_argument(std::string(what) + ": component count mismatch");
}

void require_admissible_direction(const ProblemSpec& problem, const SampledPath& h) {
  const int n = problem.grid.n;
  const double scale = 1.0 + h.max_abs();
  for (int i = 0; i < problem.components; ++i) {
    if (std::fabs(h(i, 0)) > 1e-12 * scale)
      throw std::invalid_argument("direction must vanish at x = a");
    if (problem.bc.right[static_cast<std::size_t>(i)].kind == RightBoundary::Kind::Fixed &&
        std::fabs(h(i, n)) > 1e-12 * scale)
      throw std::invalid_argument("direction must vanish at fixed right endpoints");
  }
}

double trapezoid_sum(const Grid& grid, const std::vector<double>& samples) {
  const auto w = grid.trapezoid_weights();
  double acc = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) acc += w[k] * samples[k];
  return acc;
}

} // namespace

int BoundaryConditions::non_fixed_component() const {
  for (std::size_t i = 0; i < right.size(); ++i)
    if (right[i].kind != RightBoundary::Kind::Fixed) return static_cast<int>(i);
  return -1;
}

void ProblemSpec::validate() const {
  if (components < 1) throw std::invalid_argument("problem needs at least one component");
  if (lagrangian.empty()) throw std::invalid_argument("problem has no Lagrangian");
  if (lagrangian.arity() != components)
    throw std::invalid_argument("Lagrangian arity does not match the component count");
  if (bc.left.size() != static_cast<std::size_t>(components) ||
      bc.right.size() != static_cast<std::size_t>(components))
    throw std::invalid_argument("boundary data size does not match the component count");
  int non_fixed = 0;
  for (const auto& r : bc.right)
    if (r.kind != RightBoundary::Kind::Fixed) ++non_fixed;
  if (non_fixed > 1)
    throw std::invalid_argument("at most one right endpoint component may be free or capped");
  for (const auto& c : constraints) {
    if (c.integrand.empty() || c.integrand.arity() != components)
      throw std::invalid_argument("constraint integrand arity does not match the component count");
  }
  if (grid.n < 4) throw std::invalid_argument("problem grid needs n >= 4");
}

bool ProblemSpec::has_fractional_dependence() const {
  if (expr::depends_on(lagrangian, NodeKind::DFrac)) return true;
  for (const auto& c : constraints)
    if (expr::depends_on(c.integrand, NodeKind::DFrac)) return true;
  return false;
}

double Residual::max_el() const {
  double m = 0.0;
  for (const auto& comp : el)
    for (double v : comp) m = std::max(m, std::fabs(v));
  return m;
}

PathJet path_jet(const ProblemSpec& problem, const SampledPath& y) {
  require_path_shape(problem, y, "path_jet");
  return PathJet{y, ops::sbp_derivative(y), ops::combined_caputo(y, problem.params)};
}

double functional_value(const ProblemSpec& problem, const SampledPath& y) {
  const PathJet jet = path_jet(problem, y);
  return trapezoid_sum(problem.grid, sample_along(problem.lagrangian, jet));
}

double first_variation(const ProblemSpec& problem, const expr::LagrangianExpr& integrand,
                       const SampledPath& y, const SampledPath& h) {
  require_path_shape(problem, y, "first_variation");
  require_path_shape(problem, h, "first_variation direction");
  require_admissible_direction(problem, h);
  const PathJet jet = path_jet(problem, y);
  const SampledPath hdy = ops::sbp_derivative(h);
  const SampledPath hDy = ops::combined_caputo(h, problem.params);
  const auto w = problem.grid.trapezoid_weights();
  double acc = 0.0;
  for (int i = 1; i <= problem.components; ++i) {
    const auto pY = sample_along(expr::diff(integrand, {NodeKind::Y, i}), jet);
    const auto pDY = sample_along(expr::diff(integrand, {NodeKind::DY, i}), jet);
    const auto pDF = sample_along(expr::diff(integrand, {NodeKind::DFrac, i}), jet);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int node = static_cast<int>(k);
      acc += w[k] * (pY[k] * h(i - 1, node) + pDY[k] * hdy(i - 1, node) +
                     pDF[k] * hDy(i - 1, node));
    }
  }
  return acc;
}

double first_variation(const ProblemSpec& problem, const SampledPath& y, const SampledPath& h) {
  return first_variation(problem, problem.lagrangian, y, h);
}

Residual el_residual(const ProblemSpec& problem, const SampledPath& y,
                     const std::optional<MultiplierSet>& multipliers) {
  problem.validate();
  require_path_shape(problem, y, "el_residual");
  if (multipliers.has_value() != !problem.constraints.empty())
    throw std::invalid_argument("multipliers must be supplied exactly when constraints exist");

  const std::vector<double> coeffs =
      multipliers ? effective_multipliers(problem, *multipliers)
                  : std::vector<double>(problem.constraints.size(), 0.0);

  const PathJet jet = path_jet(problem, y);
  const int n = problem.grid.n;

  Residual res;
  res.window_begin = (n + 19) / 20;     // ceil(0.05 n)
  res.window_end = (19 * n) / 20;       // floor(0.95 n)
  res.el.reserve(static_cast<std::size_t>(problem.components));

  for (int i = 1; i <= problem.components; ++i) {
    const auto pY = linear_combination(jet, problem.lagrangian, problem.constraints, coeffs,
                                       {NodeKind::Y, i});
    auto pDY = linear_combination(jet, problem.lagrangian, problem.constraints, coeffs,
                                  {NodeKind::DY, i});
    auto pDF = linear_combination(jet, problem.lagrangian, problem.constraints, coeffs,
                                  {NodeKind::DFrac, i});
    const SampledPath ddx =
        ops::fd_derivative(SampledPath(problem.grid, {std::move(pDY)}));
    const SampledPath dual =
        ops::dual_combined_rl(SampledPath(problem.grid, {std::move(pDF)}), problem.params);

    std::vector<double> window;
    window.reserve(static_cast<std::size_t>(res.window_end - res.window_begin + 1));
    for (int k = res.window_begin; k <= res.window_end; ++k)
      window.push_back(pY[static_cast<std::size_t>(k)] - ddx(0, k) + dual(0, k));
    res.el.push_back(std::move(window));
  }

  if (!problem.constraints.empty()) {
    const auto values = constraint_values(problem, y);
    res.constraint_violation.resize(values.size());
    for (std::size_t j = 0; j < values.size(); ++j)
      res.constraint_violation[j] = values[j] - problem.constraints[j].target;
    if (multipliers) {
      res.slackness.resize(values.size());
      for (std::size_t j = 0; j < values.size(); ++j)
        res.slackness[j] = multipliers->lambda[j] * (problem.constraints[j].target - values[j]);
    }
  }
  if (problem.bc.non_fixed_component() >= 0)
    res.transversality = transversality_residual(problem, y);
  return res;
}

TransversalityReport transversality_residual(const ProblemSpec& problem, const SampledPath& y) {
  problem.validate();
  require_path_shape(problem, y, "transversality_residual");
  const int l = problem.bc.non_fixed_component();
  if (l < 0)
    throw std::invalid_argument("transversality requires a free or capped endpoint component");

  const PathJet jet = path_jet(problem, y);
  const int n = problem.grid.n;
  const auto pDY = sample_along(expr::diff(problem.lagrangian, {NodeKind::DY, l + 1}), jet);
  auto pDF = sample_along(expr::diff(problem.lagrangian, {NodeKind::DFrac, l + 1}), jet);
  const SampledPath p(problem.grid, {std::move(pDF)});
  // Right integral at its own right endpoint is the empty integral; the
  // left integral at x = b covers the whole interval.
  const SampledPath ira = ops::right_rlfi(p, 1.0 - problem.params.alpha);
  const SampledPath ilb = ops::left_rlfi(p, 1.0 - problem.params.beta);
  const double value = pDY[static_cast<std::size_t>(n)] +
                       problem.params.gamma * ira(0, n) -
                       (1.0 - problem.params.gamma) * ilb(0, n);

  TransversalityReport report;
  report.value = value;
  report.component = l;
  const RightBoundary& rb = problem.bc.right[static_cast<std::size_t>(l)];
  report.capped = rb.kind == RightBoundary::Kind::Capped;
  report.cap_slack = report.capped ? rb.value - y(l, n) : 0.0;
  return report;
}

std::vector<double> constraint_values(const ProblemSpec& problem, const SampledPath& y) {
  problem.validate();
  require_path_shape(problem, y, "constraint_values");
  if (problem.constraints.empty())
    throw std::invalid_argument("constraint_values requires at least one constraint");
  const PathJet jet = path_jet(problem, y);
  std::vector<double> out;
  out.reserve(problem.constraints.size());
  for (const auto& c : problem.constraints)
    out.push_back(trapezoid_sum(problem.grid, sample_along(c.integrand, jet)));
  return out;
}

int check_regularity(const ProblemSpec& problem, const SampledPath& y,
                     const std::vector<SampledPath>& directions) {
  problem.validate();
  const std::size_t r = problem.constraints.size();
  if (r == 0) throw std::invalid_argument("check_regularity requires constraints");
  if (directions.size() < r)
    throw std::invalid_argument("need at least as many directions as constraints");

  Eigen::MatrixXd A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(directions.size()));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < directions.size(); ++l)
      A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
          first_variation(problem, problem.constraints[k].integrand, y, directions[l]);

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double threshold = 1e-8 * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold && sv(0) > 0.0) ++rank;
  return rank;
}

std::vector<double> slackness_check(const ProblemSpec& problem, const SampledPath& y,
                                    const MultiplierSet& multipliers) {
  problem.validate();
  if (multipliers.lambda.size() != problem.constraints.size())
    throw std::invalid_argument("multiplier count does not match constraint count");
  bool any_inequality = false;
  for (const auto& c : problem.constraints)
    any_inequality |= c.kind == Constraint::Kind::Inequality;
  if (!any_inequality)
    throw std::invalid_argument("slackness_check requires at least one inequality constraint");
  const auto values = constraint_values(problem, y);
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    out[j] = multipliers.lambda[j] * (problem.constraints[j].target - values[j]);
  return out;
}

double norm_1_infty(const ProblemSpec& problem, const SampledPath& y) {
  const PathJet jet = path_jet(problem, y);
  auto max_norm = [&](const SampledPath& p) {
    double m = 0.0;
    for (int k = 0; k <= p.grid().n; ++k) {
      double s = 0.0;
      for (int i = 0; i < p.components(); ++i) s += p(i, k) * p(i, k);
      m = std::max(m, std::sqrt(s));
    }
    return m;
  };
  return max_norm(jet.y) + max_norm(jet.dy) + max_norm(jet.Dy);
}

} // namespace frac::var
