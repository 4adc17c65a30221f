#include "frac/fracops.hpp"

#include <cmath>
#include <vector>

#include "frac/errors.hpp"
#include "frac/specfun.hpp"

namespace frac::ops {
namespace {

// d^p - (d-1)^p for integer d >= 1, evaluated as
// d^p * (1 - (1 - 1/d)^p) via expm1/log1p to avoid the cancellation of
// the direct difference at large d.
double power_difference(int d, double p) {
  if (d == 1) return 1.0;
  return std::pow(static_cast<double>(d), p) *
         (-std::expm1(p * std::log1p(-1.0 / static_cast<double>(d))));
}

void require_same_grid(const SampledPath& f, const SampledPath& g) {
  if (!(f.grid() == g.grid()))
    throw GridMismatchError("paths must be sampled on the same grid");
}

void require_single_component(const SampledPath& f, const char* what) {
  if (f.components() != 1)
    throw std::invalid_argument(std::string(what) + " requires a single-component path");
}

void require_order_in_0_1(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError(std::string(what) + " requires order in (0,1), got " + std::to_string(alpha));
}

// (1/Gamma(alpha)) int_a^{x_k} (x_k-t)^{alpha-1} f(t) dt with f replaced by
// its piecewise-linear interpolant. With u = x_k - t the cell between nodes
// j and j+1 contributes, for d = k - j,
//   h^alpha/Gamma(alpha) * ( f_j * U(d) + f_{j+1} * V(d) ),
//   U(d) = (1-d) P0(d)/alpha + P1(d)/(alpha+1),
//   V(d) =     d P0(d)/alpha - P1(d)/(alpha+1),
// where P0(d) = d^alpha - (d-1)^alpha and P1(d) = d^{alpha+1} - (d-1)^{alpha+1}
// are the exact kernel moments.
std::vector<double> rlfi_left_component(const std::vector<double>& f, double h,
                                        double alpha) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<double> U(static_cast<std::size_t>(n) + 1), V(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) {
    const double p0 = power_difference(d, alpha);
    const double p1 = power_difference(d, alpha + 1.0);
    U[static_cast<std::size_t>(d)] = (1.0 - d) * p0 / alpha + p1 / (alpha + 1.0);
    V[static_cast<std::size_t>(d)] = d * p0 / alpha - p1 / (alpha + 1.0);
  }
  const double scale = std::pow(h, alpha) / specfun::gamma(alpha);
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 0; j < k; ++j) {
      const int d = k - j;
      acc += f[static_cast<std::size_t>(j)] * U[static_cast<std::size_t>(d)] +
             f[static_cast<std::size_t>(j + 1)] * V[static_cast<std::size_t>(d)];
    }
    out[static_cast<std::size_t>(k)] = scale * acc;
  }
  return out;
}

// L1 scheme: (1/Gamma(1-alpha)) int (x_k-t)^{-alpha} f'(t) dt with f
// piecewise linear, i.e.
//   h^{-alpha}/Gamma(2-alpha) * sum_{j<k} (f_{j+1}-f_j) B(k-j),
//   B(d) = d^{1-alpha} - (d-1)^{1-alpha}.
std::vector<double> caputo_left_component(const std::vector<double>& f, double h,
                                          double alpha) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<double> B(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) B[static_cast<std::size_t>(d)] = power_difference(d, 1.0 - alpha);
  const double scale = std::pow(h, -alpha) / specfun::gamma(2.0 - alpha);
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
      acc += (f[static_cast<std::size_t>(j + 1)] - f[static_cast<std::size_t>(j)]) *
             B[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = scale * acc;
  }
  return out;
}

std::vector<double> fd_component(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int k = 1; k < n; ++k)
    d[static_cast<std::size_t>(k)] =
        (f[static_cast<std::size_t>(k + 1)] - f[static_cast<std::size_t>(k - 1)]) / (2.0 * h);
  d[static_cast<std::size_t>(n)] =
      (3.0 * f[static_cast<std::size_t>(n)] - 4.0 * f[static_cast<std::size_t>(n - 1)] +
       f[static_cast<std::size_t>(n - 2)]) /
      (2.0 * h);
  return d;
}

std::vector<double> sbp_component(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  d[0] = (f[1] - f[0]) / h;
  for (int k = 1; k < n; ++k)
    d[static_cast<std::size_t>(k)] =
        (f[static_cast<std::size_t>(k + 1)] - f[static_cast<std::size_t>(k - 1)]) / (2.0 * h);
  d[static_cast<std::size_t>(n)] =
      (f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n - 1)]) / h;
  return d;
}

template <typename ComponentOp>
SampledPath apply_componentwise(const SampledPath& f, ComponentOp&& op) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(f.components()));
  for (int i = 0; i < f.components(); ++i) out.push_back(op(f.component_values(i)));
  return SampledPath(f.grid(), std::move(out));
}

SampledPath reversed_apply(const SampledPath& f, SampledPath (*left_op)(const SampledPath&, double),
                           double alpha) {
  return left_op(f.reversed(), alpha).reversed();
}

} // namespace

FractionalParams::FractionalParams(double alpha, double beta, double gamma)
    : alpha(alpha), beta(beta), gamma(gamma) {
  require_order_in_0_1(alpha, "FractionalParams.alpha");
  require_order_in_0_1(beta, "FractionalParams.beta");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw DomainError("FractionalParams.gamma must lie in [0,1]");
}

SampledPath left_rlfi(const SampledPath& f, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("left_rlfi requires alpha in (0,1], got " + std::to_string(alpha));
  const double h = f.grid().spacing();
  return apply_componentwise(f, [&](const std::vector<double>& c) {
    return rlfi_left_component(c, h, alpha);
  });
}

SampledPath right_rlfi(const SampledPath& f, double alpha) {
  return reversed_apply(f, &left_rlfi, alpha);
}

SampledPath left_caputo(const SampledPath& f, double alpha) {
  require_order_in_0_1(alpha, "left_caputo");
  if (f.grid().n < 4) throw std::invalid_argument("left_caputo requires a grid with n >= 4");
  const double h = f.grid().spacing();
  return apply_componentwise(f, [&](const std::vector<double>& c) {
    return caputo_left_component(c, h, alpha);
  });
}

SampledPath right_caputo(const SampledPath& f, double alpha) {
  return reversed_apply(f, &left_caputo, alpha);
}

SampledPath left_rlfd(const SampledPath& f, double alpha) {
  require_order_in_0_1(alpha, "left_rlfd");
  if (f.grid().n < 4) throw std::invalid_argument("left_rlfd requires a grid with n >= 4");
  const double h = f.grid().spacing();
  return apply_componentwise(f, [&](const std::vector<double>& c) {
    return fd_component(rlfi_left_component(c, h, 1.0 - alpha), h);
  });
}

SampledPath right_rlfd(const SampledPath& f, double alpha) {
  return reversed_apply(f, &left_rlfd, alpha);
}

SampledPath combined_caputo(const SampledPath& f, const FractionalParams& p) {
  if (p.gamma == 1.0) return left_caputo(f, p.alpha);
  if (p.gamma == 0.0) return right_caputo(f, p.beta);
  SampledPath left = left_caputo(f, p.alpha);
  const SampledPath right = right_caputo(f, p.beta);
  for (int i = 0; i < f.components(); ++i) {
    auto& c = left.component_values(i);
    const auto& r = right.component_values(i);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = p.gamma * c[k] + (1.0 - p.gamma) * r[k];
  }
  return left;
}

SampledPath dual_combined_rl(const SampledPath& g, const FractionalParams& p) {
  if (p.gamma == 1.0) return right_rlfd(g, p.alpha);
  if (p.gamma == 0.0) return left_rlfd(g, p.beta);
  SampledPath left = left_rlfd(g, p.beta);
  const SampledPath right = right_rlfd(g, p.alpha);
  for (int i = 0; i < g.components(); ++i) {
    auto& c = left.component_values(i);
    const auto& r = right.component_values(i);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = (1.0 - p.gamma) * c[k] + p.gamma * r[k];
  }
  return left;
}

double trapezoid(const SampledPath& f) {
  require_single_component(f, "trapezoid");
  const auto w = f.grid().trapezoid_weights();
  const auto& c = f.component_values(0);
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += w[k] * c[k];
  return acc;
}

double check_rlfi_parts(const SampledPath& f, const SampledPath& g, double alpha) {
  require_same_grid(f, g);
  require_single_component(f, "check_rlfi_parts");
  require_single_component(g, "check_rlfi_parts");
  const auto w = f.grid().trapezoid_weights();
  const auto& fv = f.component_values(0);
  const auto& gv = g.component_values(0);
  const auto lf = left_rlfi(f, alpha);
  const auto rg = right_rlfi(g, alpha);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t k = 0; k < fv.size(); ++k) {
    lhs += w[k] * gv[k] * lf.component_values(0)[k];
    rhs += w[k] * fv[k] * rg.component_values(0)[k];
  }
  return std::fabs(lhs - rhs);
}

PartsCheck check_combined_parts(const SampledPath& f, const SampledPath& g,
                                const FractionalParams& p) {
  require_same_grid(f, g);
  require_single_component(f, "check_combined_parts");
  require_single_component(g, "check_combined_parts");
  const int n = f.grid().n;
  const auto w = f.grid().trapezoid_weights();
  const auto& fv = f.component_values(0);
  const auto& gv = g.component_values(0);

  const auto cf = combined_caputo(f, p);
  const auto dg = dual_combined_rl(g, p);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t k = 0; k < fv.size(); ++k) {
    lhs += w[k] * gv[k] * cf.component_values(0)[k];
    rhs += w[k] * fv[k] * dg.component_values(0)[k];
  }

  const auto ira = right_rlfi(g, 1.0 - p.alpha).component_values(0); // x I_b^{1-alpha} g
  const auto ilb = left_rlfi(g, 1.0 - p.beta).component_values(0);   // a I_x^{1-beta} g
  auto bracket = [&](int k) {
    return p.gamma * fv[static_cast<std::size_t>(k)] * ira[static_cast<std::size_t>(k)] -
           (1.0 - p.gamma) * fv[static_cast<std::size_t>(k)] * ilb[static_cast<std::size_t>(k)];
  };
  const double boundary = bracket(n) - bracket(0);
  return PartsCheck{std::fabs(lhs - rhs - boundary), boundary};
}

SampledPath fd_derivative(const SampledPath& f) {
  if (f.grid().n < 4) throw std::invalid_argument("fd_derivative requires a grid with n >= 4");
  const double h = f.grid().spacing();
  return apply_componentwise(f, [&](const std::vector<double>& c) { return fd_component(c, h); });
}

SampledPath sbp_derivative(const SampledPath& f) {
  if (f.grid().n < 4) throw std::invalid_argument("sbp_derivative requires a grid with n >= 4");
  const double h = f.grid().spacing();
  return apply_componentwise(f, [&](const std::vector<double>& c) { return sbp_component(c, h); });
}

} // namespace frac::ops
