#pragma once

// Built-in family of fractional isoperimetric problems with closed-form
// extremals, used for validation and by `frac reproduce`: minimize
// int_0^1 (y' + D^alpha y)^2 subject to int_0^1 (y' + D^alpha y) = xi
// with gamma = 1. The extremal keeps y' + D^alpha y identically equal
// to xi; its multiplier is 2 xi. As alpha -> 1 the extremal approaches
// the line xi*x/2, as alpha -> 0 the classical extremal xi*(1 - e^{-x}).

#include <string>
#include <vector>

#include "frac/grid.hpp"
#include "frac/solver.hpp"
#include "frac/variational.hpp"

namespace frac::ref {

/// Node values of y(x) = xi * int_0^x E_{1-alpha}(-(x-t)^{1-alpha}) dt.
/// The substitutions s = x-t, v = s^{1-alpha} turn the family of
/// convolutions into one cumulative integral of E_{1-alpha}(-v) against
/// the weight v^{alpha/(1-alpha)}, integrated with exact weight moments
/// per cell (product trapezoid) on a refined grid merged with the
/// requested nodes. Requires grid.a == 0 and alpha in (0,1).
std::vector<double> ml_extremal_path(const Grid& grid, double alpha, double xi);

/// alpha = 1/2 closed form: xi * (e^x erfc(sqrt x) + 2 sqrt(x/pi) - 1).
double ml_extremal_erfc_form(double x, double xi);

/// Assembles the isoperimetric problem on [0,1] with n subintervals;
/// the right boundary value is taken from ml_extremal_path.
var::ProblemSpec ml_extremal_problem(double alpha, double xi, int n);

struct ReproRow {
  double alpha = 0.0;
  bool solved = false; // all sub-steps ran; failures leave `message`
  bool converged = false;
  double path_error = 0.0;       // max-norm vs the Mittag-Leffler reference
  double el_max = 0.0;           // interior Euler-Lagrange residual maximum
  double constraint_error = 0.0; // |G(y) - xi|
  double lambda = 0.0;           // recovered multiplier (2*xi expected)
  double err_vs_line = 0.0;      // max-norm vs xi*x/2
  double err_vs_classical = 0.0; // max-norm vs xi*(1 - e^{-x})
  double err_vs_erfc_form = -1.0; // alpha = 1/2 rows only, else -1
  bool pass = false;
  std::string message;
};

struct ReproOptions {
  double xi = 1.0;
  int n = 1000;
  double path_tolerance = 5e-3;
  double lambda_tolerance = 0.05;
  double constraint_tolerance = 1e-6;
  solver::SolveOptions solve;
};

/// One row per alpha; a failing sub-step marks that row and continues.
std::vector<ReproRow> reproduce(const std::vector<double>& alphas, const ReproOptions& options);

} // namespace frac::ref
