#include "frac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

#include "frac/errors.hpp"
#include "frac/specfun.hpp"

namespace frac::solver {
namespace {

using expr::LagrangianExpr;
using expr::NodeKind;
using var::Constraint;
using var::ProblemSpec;
using var::RightBoundary;

double default_gradient_tolerance(const ProblemSpec& problem) {
  return problem.has_fractional_dependence() ? 1e-6 : 1e-8;
}

// ---- linear-operator adjoints -------------------------------------------

// g += D^T s for the summation-by-parts derivative stencil.
void sbp_adjoint_accumulate(const std::vector<double>& s, double h, std::vector<double>& g) {
  const int n = static_cast<int>(s.size()) - 1;
  g[0] += -s[0] / h;
  g[1] += s[0] / h;
  for (int k = 1; k < n; ++k) {
    g[static_cast<std::size_t>(k - 1)] -= s[static_cast<std::size_t>(k)] / (2.0 * h);
    g[static_cast<std::size_t>(k + 1)] += s[static_cast<std::size_t>(k)] / (2.0 * h);
  }
  g[static_cast<std::size_t>(n - 1)] -= s[static_cast<std::size_t>(n)] / h;
  g[static_cast<std::size_t>(n)] += s[static_cast<std::size_t>(n)] / h;
}

// g += scale * C^T s for the left L1 Caputo operator of order alpha.
void caputo_left_adjoint_accumulate(const std::vector<double>& s, double h, double alpha,
                                    double scale, std::vector<double>& g) {
  const int n = static_cast<int>(s.size()) - 1;
  std::vector<double> B(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d)
    B[static_cast<std::size_t>(d)] =
        d == 1 ? 1.0
               : std::pow(static_cast<double>(d), 1.0 - alpha) *
                     (-std::expm1((1.0 - alpha) * std::log1p(-1.0 / d)));
  const double kappa = scale * std::pow(h, -alpha) / specfun::gamma(2.0 - alpha);
  for (int k = 1; k <= n; ++k) {
    const double sk = kappa * s[static_cast<std::size_t>(k)];
    if (sk == 0.0) continue;
    for (int j = 0; j < k; ++j) {
      const double c = sk * B[static_cast<std::size_t>(k - j)];
      g[static_cast<std::size_t>(j + 1)] += c;
      g[static_cast<std::size_t>(j)] -= c;
    }
  }
}

// g += C^T s for the combined Caputo operator (left part gamma, right
// part (1-gamma) via reversal of the left adjoint).
void combined_adjoint_accumulate(const std::vector<double>& s, double h,
                                 const ops::FractionalParams& p, std::vector<double>& g) {
  if (p.gamma != 0.0) caputo_left_adjoint_accumulate(s, h, p.alpha, p.gamma, g);
  if (p.gamma != 1.0) {
    std::vector<double> sr(s.rbegin(), s.rend());
    std::vector<double> gr(g.size(), 0.0);
    caputo_left_adjoint_accumulate(sr, h, p.beta, 1.0 - p.gamma, gr);
    for (std::size_t m = 0; m < g.size(); ++m) g[m] += gr[g.size() - 1 - m];
  }
}

// ---- cached problem discretization ---------------------------------------

struct IntegrandPartials {
  const LagrangianExpr* value;
  std::vector<LagrangianExpr> dY, dDY, dDF; // per component
};

class Evaluator {
public:
  explicit Evaluator(const ProblemSpec& problem)
      : problem_(problem), w_(problem.grid.trapezoid_weights()) {
    partials_.push_back(build(problem.lagrangian));
    for (const auto& c : problem.constraints) partials_.push_back(build(c.integrand));
  }

  // Functional and constraint values; jet reused for the gradient.
  struct Values {
    double objective;
    std::vector<double> constraint; // trapz(G_j) - xi_j
  };

  Values values(const var::PathJet& jet) const {
    Values out;
    out.objective = integrate(jet, *partials_[0].value);
    out.constraint.resize(problem_.constraints.size());
    for (std::size_t j = 0; j < problem_.constraints.size(); ++j)
      out.constraint[j] =
          integrate(jet, *partials_[j + 1].value) - problem_.constraints[j].target;
    return out;
  }

  var::PathJet jet(const SampledPath& y) const { return var::path_jet(problem_, y); }

  // Full-path gradient of trapz(L) + sum_j coef_j * trapz(G_j).
  SampledPath gradient(const var::PathJet& jet, const std::vector<double>& coef) const {
    const int N = problem_.components;
    const int n = problem_.grid.n;
    const double h = problem_.grid.spacing();
    SampledPath grad(problem_.grid, N);
    std::vector<double> pY, pDY, pDF;
    for (int i = 0; i < N; ++i) {
      combined_partial_samples(jet, coef, i, pY, pDY, pDF);
      auto& g = grad.component_values(i);
      for (int k = 0; k <= n; ++k) pY[static_cast<std::size_t>(k)] *= w_[static_cast<std::size_t>(k)];
      for (int k = 0; k <= n; ++k) pDY[static_cast<std::size_t>(k)] *= w_[static_cast<std::size_t>(k)];
      for (int k = 0; k <= n; ++k) pDF[static_cast<std::size_t>(k)] *= w_[static_cast<std::size_t>(k)];
      for (int k = 0; k <= n; ++k) g[static_cast<std::size_t>(k)] += pY[static_cast<std::size_t>(k)];
      sbp_adjoint_accumulate(pDY, h, g);
      combined_adjoint_accumulate(pDF, h, problem_.params, g);
    }
    return grad;
  }

  const ProblemSpec& problem() const { return problem_; }

private:
  IntegrandPartials build(const LagrangianExpr& e) {
    IntegrandPartials p;
    p.value = &e;
    for (int i = 1; i <= problem_.components; ++i) {
      p.dY.push_back(expr::diff(e, {NodeKind::Y, i}));
      p.dDY.push_back(expr::diff(e, {NodeKind::DY, i}));
      p.dDF.push_back(expr::diff(e, {NodeKind::DFrac, i}));
    }
    return p;
  }

  double eval_at(const LagrangianExpr& e, const var::PathJet& jet, int k,
                 std::vector<double>& ybuf, std::vector<double>& dybuf,
                 std::vector<double>& Dbuf) const {
    for (int i = 0; i < problem_.components; ++i) {
      ybuf[static_cast<std::size_t>(i)] = jet.y(i, k);
      dybuf[static_cast<std::size_t>(i)] = jet.dy(i, k);
      Dbuf[static_cast<std::size_t>(i)] = jet.Dy(i, k);
    }
    return expr::eval(e, {problem_.grid.node(k), ybuf, dybuf, Dbuf});
  }

  double integrate(const var::PathJet& jet, const LagrangianExpr& e) const {
    const int n = problem_.grid.n;
    std::vector<double> ybuf(static_cast<std::size_t>(problem_.components)),
        dybuf(ybuf.size()), Dbuf(ybuf.size());
    double acc = 0.0;
    for (int k = 0; k <= n; ++k)
      acc += w_[static_cast<std::size_t>(k)] * eval_at(e, jet, k, ybuf, dybuf, Dbuf);
    return acc;
  }

  void combined_partial_samples(const var::PathJet& jet, const std::vector<double>& coef,
                                int component, std::vector<double>& pY, std::vector<double>& pDY,
                                std::vector<double>& pDF) const {
    const int n = problem_.grid.n;
    const std::size_t nodes = static_cast<std::size_t>(n) + 1;
    pY.assign(nodes, 0.0);
    pDY.assign(nodes, 0.0);
    pDF.assign(nodes, 0.0);
    std::vector<double> ybuf(static_cast<std::size_t>(problem_.components)),
        dybuf(ybuf.size()), Dbuf(ybuf.size());
    for (int k = 0; k <= n; ++k) {
      const std::size_t kk = static_cast<std::size_t>(k);
      const std::size_t ci = static_cast<std::size_t>(component);
      pY[kk] = eval_at(partials_[0].dY[ci], jet, k, ybuf, dybuf, Dbuf);
      pDY[kk] = eval_at(partials_[0].dDY[ci], jet, k, ybuf, dybuf, Dbuf);
      pDF[kk] = eval_at(partials_[0].dDF[ci], jet, k, ybuf, dybuf, Dbuf);
      for (std::size_t j = 0; j < coef.size(); ++j) {
        if (coef[j] == 0.0) continue;
        pY[kk] += coef[j] * eval_at(partials_[j + 1].dY[ci], jet, k, ybuf, dybuf, Dbuf);
        pDY[kk] += coef[j] * eval_at(partials_[j + 1].dDY[ci], jet, k, ybuf, dybuf, Dbuf);
        pDF[kk] += coef[j] * eval_at(partials_[j + 1].dDF[ci], jet, k, ybuf, dybuf, Dbuf);
      }
    }
  }

  const ProblemSpec& problem_;
  std::vector<double> w_;
  std::vector<IntegrandPartials> partials_;
};

// ---- decision-vector packing ---------------------------------------------

struct Packing {
  std::vector<std::pair<int, int>> entries; // (component, node)
  int capped_index = -1;                    // decision index of a capped endpoint
  double cap = 0.0;

  static Packing make(const ProblemSpec& problem) {
    Packing p;
    for (int i = 0; i < problem.components; ++i) {
      for (int k = 1; k < problem.grid.n; ++k) p.entries.emplace_back(i, k);
      const RightBoundary& rb = problem.bc.right[static_cast<std::size_t>(i)];
      if (rb.kind != RightBoundary::Kind::Fixed) {
        p.entries.emplace_back(i, problem.grid.n);
        if (rb.kind == RightBoundary::Kind::Capped) {
          p.capped_index = static_cast<int>(p.entries.size()) - 1;
          p.cap = rb.value;
        }
      }
    }
    return p;
  }

  SampledPath unpack(const ProblemSpec& problem, const std::vector<double>& x) const {
    SampledPath y(problem.grid, problem.components);
    for (int i = 0; i < problem.components; ++i) {
      y.at(i, 0) = problem.bc.left[static_cast<std::size_t>(i)];
      const RightBoundary& rb = problem.bc.right[static_cast<std::size_t>(i)];
      if (rb.kind == RightBoundary::Kind::Fixed) y.at(i, problem.grid.n) = rb.value;
    }
    for (std::size_t m = 0; m < entries.size(); ++m)
      y.at(entries[m].first, entries[m].second) = x[m];
    return y;
  }

  std::vector<double> pack(const SampledPath& full) const {
    std::vector<double> x(entries.size());
    for (std::size_t m = 0; m < entries.size(); ++m)
      x[m] = full(entries[m].first, entries[m].second);
    return x;
  }

  void project(std::vector<double>& x) const {
    if (capped_index >= 0)
      x[static_cast<std::size_t>(capped_index)] =
          std::min(x[static_cast<std::size_t>(capped_index)], cap);
  }

  bool at_cap(const std::vector<double>& x) const {
    return capped_index >= 0 && x[static_cast<std::size_t>(capped_index)] >= cap;
  }
};

std::vector<double> initial_guess(const ProblemSpec& problem, const Packing& packing,
                                  unsigned seed) {
  // straight line between boundary data; a free or capped endpoint
  // starts at the left value
  SampledPath y(problem.grid, problem.components);
  for (int i = 0; i < problem.components; ++i) {
    const double ya = problem.bc.left[static_cast<std::size_t>(i)];
    const RightBoundary& rb = problem.bc.right[static_cast<std::size_t>(i)];
    double yb = rb.kind == RightBoundary::Kind::Fixed ? rb.value : ya;
    if (rb.kind == RightBoundary::Kind::Capped) yb = std::min(yb, rb.value);
    for (int k = 0; k <= problem.grid.n; ++k) {
      const double t = static_cast<double>(k) / problem.grid.n;
      y.at(i, k) = ya + (yb - ya) * t;
    }
  }
  std::vector<double> x = packing.pack(y);
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    for (double& v : x) v += noise(rng);
    packing.project(x);
  }
  return x;
}

// ---- projected L-BFGS ------------------------------------------------------

struct InnerResult {
  std::vector<double> x;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

double projected_grad_norm(const std::vector<double>& x, const std::vector<double>& g,
                           const Packing& packing) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double gi = g[i];
    // at an active cap, outward pressure is not a residual
    if (static_cast<int>(i) == packing.capped_index && x[i] >= packing.cap && gi < 0.0) gi = 0.0;
    m = std::max(m, std::fabs(gi));
  }
  return m;
}

template <typename ValueGrad>
InnerResult lbfgs_minimize(ValueGrad&& value_and_grad, std::vector<double> x,
                           const Packing& packing, int max_iterations, double gtol,
                           const std::function<void(int, double, double)>& trace) {
  constexpr int kMemory = 10;
  constexpr double kArmijo = 1e-4;

  packing.project(x);
  std::vector<double> g;
  double fx = value_and_grad(x, &g);

  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  bool was_at_cap = packing.at_cap(x);

  InnerResult out;
  out.iterations = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    const double pg = projected_grad_norm(x, g, packing);
    if (trace) trace(iter, fx, pg);
    if (pg <= gtol) {
      out.converged = true;
      break;
    }

    // two-loop recursion
    std::vector<double> d(g.begin(), g.end());
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      const auto& s = s_hist[static_cast<std::size_t>(i)];
      const auto& yv = y_hist[static_cast<std::size_t>(i)];
      double sd = 0.0;
      for (std::size_t m = 0; m < d.size(); ++m) sd += s[m] * d[m];
      alpha[static_cast<std::size_t>(i)] = rho_hist[static_cast<std::size_t>(i)] * sd;
      for (std::size_t m = 0; m < d.size(); ++m)
        d[m] -= alpha[static_cast<std::size_t>(i)] * yv[m];
    }
    if (!s_hist.empty()) {
      const auto& s = s_hist.back();
      const auto& yv = y_hist.back();
      double sy = 0.0, yy = 0.0;
      for (std::size_t m = 0; m < d.size(); ++m) {
        sy += s[m] * yv[m];
        yy += yv[m] * yv[m];
      }
      const double scale = sy / yy;
      for (double& v : d) v *= scale;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const auto& s = s_hist[i];
      const auto& yv = y_hist[i];
      double yd = 0.0;
      for (std::size_t m = 0; m < d.size(); ++m) yd += yv[m] * d[m];
      const double beta = rho_hist[i] * yd;
      for (std::size_t m = 0; m < d.size(); ++m) d[m] += s[m] * (alpha[i] - beta);
    }
    for (double& v : d) v = -v; // descent direction

    double gd = 0.0;
    for (std::size_t m = 0; m < d.size(); ++m) gd += g[m] * d[m];
    if (gd >= 0.0) { // curvature breakdown: restart from steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      gd = 0.0;
      for (std::size_t m = 0; m < d.size(); ++m) {
        d[m] = -g[m];
        gd -= g[m] * g[m];
      }
    }

    // Armijo backtracking on the projected trial point
    double t = 1.0;
    std::vector<double> xt(x.size()), gt;
    double ft = fx;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      for (std::size_t m = 0; m < x.size(); ++m) xt[m] = x[m] + t * d[m];
      packing.project(xt);
      double gstep = 0.0; // g . (xt - x), equals t*g.d without a cap
      for (std::size_t m = 0; m < x.size(); ++m) gstep += g[m] * (xt[m] - x[m]);
      ft = value_and_grad(xt, nullptr);
      if (ft <= fx + kArmijo * gstep && gstep < 0.0) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    ++out.iterations;
    if (!accepted) break; // no descent at the smallest step: stop at x

    ft = value_and_grad(xt, &gt);

    std::vector<double> s(x.size()), yv(x.size());
    double sy = 0.0, ss = 0.0, yy = 0.0;
    for (std::size_t m = 0; m < x.size(); ++m) {
      s[m] = xt[m] - x[m];
      yv[m] = gt[m] - g[m];
      sy += s[m] * yv[m];
      ss += s[m] * s[m];
      yy += yv[m] * yv[m];
    }
    const bool cap_now = packing.at_cap(xt);
    if (cap_now != was_at_cap) { // active set changed: curvature pairs are stale
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      was_at_cap = cap_now;
    } else if (sy > 1e-12 * std::sqrt(ss * yy) && sy > 0.0) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kMemory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(xt);
    g.swap(gt);
    fx = ft;
  }

  out.x = std::move(x);
  out.value = fx;
  out.grad_norm = projected_grad_norm(out.x, g, packing);
  if (out.grad_norm <= gtol) out.converged = true;
  return out;
}

// ---- augmented Lagrangian states ------------------------------------------

struct ALState {
  std::vector<double> lambda; // reporting convention (inequality entries >= 0)
  double rho = 0.0;

  // phi_j(c) and phi_j'(c) of the outer penalty terms
  double term(const Constraint& c, double viol, std::size_t j) const {
    if (c.kind == Constraint::Kind::Equality)
      return -lambda[j] * viol + 0.5 * rho * viol * viol;
    const double m = std::max(0.0, lambda[j] + rho * viol);
    return (m * m - lambda[j] * lambda[j]) / (2.0 * rho);
  }
  double slope(const Constraint& c, double viol, std::size_t j) const {
    if (c.kind == Constraint::Kind::Equality) return -lambda[j] + rho * viol;
    return std::max(0.0, lambda[j] + rho * viol);
  }
};

SolveReport finish(const ProblemSpec& problem, const Packing& packing, const Evaluator& eval,
                   const std::vector<double>& x, const var::MultiplierSet& multipliers,
                   int iterations, bool converged) {
  SampledPath path = packing.unpack(problem, x);
  SolveReport report{
      path,
      multipliers,
      eval.values(eval.jet(path)).objective,
      var::el_residual(problem, path,
                       problem.constraints.empty()
                           ? std::nullopt
                           : std::optional<var::MultiplierSet>(multipliers)),
      iterations,
      converged};
  return report;
}

SolveReport solve_unconstrained(const ProblemSpec& problem, const SolveOptions& options) {
  problem.validate();
  const Evaluator eval(problem);
  const Packing packing = Packing::make(problem);
  const double gtol =
      options.gradient_tolerance > 0.0 ? options.gradient_tolerance : default_gradient_tolerance(problem);

  auto value_and_grad = [&](const std::vector<double>& x, std::vector<double>* grad) {
    const SampledPath y = packing.unpack(problem, x);
    const var::PathJet jet = eval.jet(y);
    const double value = eval.values(jet).objective;
    if (grad) {
      const SampledPath g = eval.gradient(jet, {});
      *grad = packing.pack(g);
    }
    return value;
  };

  InnerResult inner = lbfgs_minimize(value_and_grad, initial_guess(problem, packing, options.seed),
                                     packing, options.max_iterations, gtol, options.on_iteration);
  return finish(problem, packing, eval, inner.x, var::MultiplierSet{}, inner.iterations,
                inner.converged);
}

} // namespace

SampledPath discrete_gradient(const ProblemSpec& problem, const SampledPath& y) {
  problem.validate();
  const Evaluator eval(problem);
  const var::PathJet jet = eval.jet(y);
  SampledPath g = eval.gradient(jet, std::vector<double>(problem.constraints.size(), 0.0));
  // zero the non-decision entries: left endpoints always, fixed right endpoints
  for (int i = 0; i < problem.components; ++i) {
    g.at(i, 0) = 0.0;
    if (problem.bc.right[static_cast<std::size_t>(i)].kind == RightBoundary::Kind::Fixed)
      g.at(i, problem.grid.n) = 0.0;
  }
  return g;
}

SolveReport solve_basic(const ProblemSpec& problem, const SolveOptions& options) {
  problem.validate();
  if (!problem.constraints.empty())
    throw std::invalid_argument("solve_basic does not accept constraints");
  if (problem.bc.non_fixed_component() >= 0)
    throw std::invalid_argument("solve_basic requires fully fixed boundary values");
  return solve_unconstrained(problem, options);
}

SolveReport solve_free_endpoint(const ProblemSpec& problem, const SolveOptions& options) {
  problem.validate();
  if (!problem.constraints.empty())
    throw std::invalid_argument("solve_free_endpoint does not accept constraints");
  if (problem.bc.non_fixed_component() < 0)
    throw std::invalid_argument("solve_free_endpoint requires a free or capped component");
  return solve_unconstrained(problem, options);
}

SolveReport solve_isoperimetric(const ProblemSpec& problem, const SolveOptions& options) {
  problem.validate();
  if (problem.constraints.empty())
    throw std::invalid_argument("solve_isoperimetric requires constraints");

  const Evaluator eval(problem);
  const Packing packing = Packing::make(problem);
  const double gtol =
      options.gradient_tolerance > 0.0 ? options.gradient_tolerance : default_gradient_tolerance(problem);
  const std::size_t r = problem.constraints.size();

  ALState state;
  state.lambda.assign(r, 0.0);
  state.rho = options.penalty_initial;

  auto violation_norm = [&](const std::vector<double>& c) {
    double v = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      const double cj = c[j];
      if (problem.constraints[j].kind == Constraint::Kind::Equality)
        v = std::max(v, std::fabs(cj));
      else
        v = std::max(v, std::max(0.0, cj));
    }
    return v;
  };

  std::vector<double> x = initial_guess(problem, packing, options.seed);
  int total_iterations = 0;
  bool converged = false;
  double previous_violation = std::numeric_limits<double>::infinity();

  constexpr int kMaxOuter = 60;
  for (int outer = 0; outer < kMaxOuter; ++outer) {
    auto value_and_grad = [&](const std::vector<double>& xx, std::vector<double>* grad) {
      const SampledPath y = packing.unpack(problem, xx);
      const var::PathJet jet = eval.jet(y);
      const Evaluator::Values vals = eval.values(jet);
      double phi = vals.objective;
      for (std::size_t j = 0; j < r; ++j)
        phi += state.term(problem.constraints[j], vals.constraint[j], j);
      if (grad) {
        std::vector<double> coef(r);
        for (std::size_t j = 0; j < r; ++j)
          coef[j] = state.slope(problem.constraints[j], vals.constraint[j], j);
        *grad = packing.pack(eval.gradient(jet, coef));
      }
      return phi;
    };

    InnerResult inner = lbfgs_minimize(value_and_grad, std::move(x), packing,
                                       options.max_iterations, gtol, options.on_iteration);
    x = std::move(inner.x);
    total_iterations += inner.iterations;

    const SampledPath y = packing.unpack(problem, x);
    const Evaluator::Values vals = eval.values(eval.jet(y));
    const double viol = violation_norm(vals.constraint);

    // multiplier update: lambda <- lambda - rho*violation (equality),
    // clamped at zero for inequalities (stored in the reporting sign)
    for (std::size_t j = 0; j < r; ++j) {
      if (problem.constraints[j].kind == Constraint::Kind::Equality)
        state.lambda[j] -= state.rho * vals.constraint[j];
      else
        state.lambda[j] = std::max(0.0, state.lambda[j] + state.rho * vals.constraint[j]);
    }

    if (viol <= options.constraint_tolerance && inner.converged) {
      converged = true;
      break;
    }
    if (viol > previous_violation / 4.0)
      state.rho = std::min(state.rho * options.penalty_growth, 1e8);
    previous_violation = viol;
  }

  var::MultiplierSet multipliers;
  // The reported equality multiplier is the Theorem coefficient of
  // F = L - lambda G; the internal update already tracks it. Inequality
  // entries are the clamped non-negative values.
  multipliers.lambda = state.lambda;
  return finish(problem, packing, eval, x, multipliers, total_iterations, converged);
}

} // namespace frac::solver
