#include "frac/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frac/errors.hpp"
#include "frac/specfun.hpp"

namespace frac::ref {
namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

std::vector<double> ml_extremal_path(const Grid& grid, double alpha, double xi) {
  if (grid.a != 0.0) throw std::invalid_argument("ml_extremal_path requires a = 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("ml_extremal_path requires alpha in (0,1)");

  const double p = 1.0 - alpha;
  const double c = alpha / p;                 // weight exponent of v^c
  const double vmax = std::pow(grid.b, p);

  // merged integration grid: targets v_k = x_k^{1-alpha} plus a uniform
  // refinement, so no cell is wide where E varies
  std::vector<double> targets(static_cast<std::size_t>(grid.n) + 1);
  for (int k = 0; k <= grid.n; ++k)
    targets[static_cast<std::size_t>(k)] = std::pow(grid.node(k), p);
  const int m = std::max(2048, 2 * grid.n);
  std::vector<double> mesh;
  mesh.reserve(targets.size() + static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) mesh.push_back(vmax * i / m);
  mesh.insert(mesh.end(), targets.begin(), targets.end());
  std::sort(mesh.begin(), mesh.end());
  mesh.erase(std::unique(mesh.begin(), mesh.end(),
                         [](double a, double b) { return std::fabs(a - b) < 1e-15; }),
             mesh.end());

  std::vector<double> g(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i)
    g[i] = specfun::mittag_leffler(p, -mesh[i]);

  // cumulative integral of g(v) * v^c with g piecewise linear and the
  // weight moments A0 = int v^c, A1 = int v^{c+1} exact per cell
  std::vector<double> cumulative(mesh.size(), 0.0);
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    const double lo = mesh[i], hi = mesh[i + 1];
    const double width = hi - lo;
    const double a0 = (std::pow(hi, c + 1.0) - std::pow(lo, c + 1.0)) / (c + 1.0);
    const double a1 = (std::pow(hi, c + 2.0) - std::pow(lo, c + 2.0)) / (c + 2.0);
    const double cell = g[i] * a0 + (g[i + 1] - g[i]) / width * (a1 - lo * a0);
    cumulative[i + 1] = cumulative[i] + cell;
  }

  std::vector<double> out(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto it = std::lower_bound(mesh.begin(), mesh.end(), targets[k] - 1e-14);
    out[k] = xi / p * cumulative[static_cast<std::size_t>(it - mesh.begin())];
  }
  return out;
}

double ml_extremal_erfc_form(double x, double xi) {
  return xi * (std::exp(x) * specfun::erfc(std::sqrt(x)) + 2.0 * std::sqrt(x / kPi) - 1.0);
}

var::ProblemSpec ml_extremal_problem(double alpha, double xi, int n) {
  const Grid grid(0.0, 1.0, n);
  const std::vector<double> reference = ml_extremal_path(grid, alpha, xi);

  var::ProblemSpec problem;
  problem.components = 1;
  problem.lagrangian = expr::parse("(dy1 + Dy1)^2", 1);
  problem.params = ops::FractionalParams(alpha, alpha, 1.0);
  problem.grid = grid;
  problem.bc.left = {0.0};
  problem.bc.right = {var::RightBoundary::fixed(reference.back())};
  problem.constraints.push_back(
      {expr::parse("dy1 + Dy1", 1), xi, var::Constraint::Kind::Equality});
  problem.validate();
  return problem;
}

std::vector<ReproRow> reproduce(const std::vector<double>& alphas, const ReproOptions& options) {
  std::vector<ReproRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    ReproRow row;
    row.alpha = alpha;
    try {
      if (options.n < 200) throw std::invalid_argument("reproduction requires n >= 200");
      const var::ProblemSpec problem = ml_extremal_problem(alpha, options.xi, options.n);
      const std::vector<double> reference = ml_extremal_path(problem.grid, alpha, options.xi);

      const solver::SolveReport report = solver::solve_isoperimetric(problem, options.solve);
      row.converged = report.converged;
      row.lambda = report.multipliers.lambda.at(0);
      row.el_max = report.residual.max_el();
      row.constraint_error = std::fabs(report.residual.constraint_violation.at(0));

      const auto& y = report.path.component_values(0);
      for (int k = 0; k <= problem.grid.n; ++k) {
        const double x = problem.grid.node(k);
        const std::size_t kk = static_cast<std::size_t>(k);
        row.path_error = std::max(row.path_error, std::fabs(y[kk] - reference[kk]));
        row.err_vs_line = std::max(row.err_vs_line, std::fabs(y[kk] - options.xi * x / 2.0));
        row.err_vs_classical =
            std::max(row.err_vs_classical, std::fabs(y[kk] - options.xi * (1.0 - std::exp(-x))));
      }
      if (alpha == 0.5) {
        row.err_vs_erfc_form = 0.0;
        for (int k = 0; k <= problem.grid.n; ++k)
          row.err_vs_erfc_form = std::max(
              row.err_vs_erfc_form,
              std::fabs(y[static_cast<std::size_t>(k)] -
                        ml_extremal_erfc_form(problem.grid.node(k), options.xi)));
      }
      row.solved = true;
      row.pass = row.converged && row.path_error <= options.path_tolerance &&
                 std::fabs(row.lambda - 2.0 * options.xi) <= options.lambda_tolerance &&
                 row.constraint_error <= options.constraint_tolerance;
      if (!row.pass) row.message = "outside tolerances";
    } catch (const std::exception& err) {
      row.solved = false;
      row.pass = false;
      row.message = err.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace frac::ref
