#include "frac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frac {

Grid::Grid(double a, double b, int n) : a(a), b(b), n(n) {
  if (!(a < b)) throw std::invalid_argument("Grid requires a < b");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Grid endpoints must be finite");
  if (n < 2) throw std::invalid_argument("Grid requires n >= 2 subintervals");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = node(k);
  return out;
}

std::vector<double> Grid::trapezoid_weights() const {
  std::vector<double> w(static_cast<std::size_t>(n) + 1, spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

SampledPath::SampledPath(Grid grid, int components)
    : grid_(grid),
      values_(static_cast<std::size_t>(components),
              std::vector<double>(static_cast<std::size_t>(grid.n) + 1, 0.0)) {
  if (components < 1) throw std::invalid_argument("SampledPath needs at least one component");
}

SampledPath::SampledPath(Grid grid, std::vector<std::vector<double>> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("SampledPath needs at least one component");
  for (const auto& comp : values_) {
    if (comp.size() != static_cast<std::size_t>(grid_.n) + 1)
      throw std::invalid_argument("SampledPath component must have grid.n + 1 values");
    for (double v : comp)
      if (!std::isfinite(v)) throw std::invalid_argument("SampledPath values must be finite");
  }
}

SampledPath SampledPath::sample(const Grid& grid,
                                const std::vector<std::function<double(double)>>& fns) {
  std::vector<std::vector<double>> values;
  values.reserve(fns.size());
  for (const auto& fn : fns) {
    std::vector<double> comp(static_cast<std::size_t>(grid.n) + 1);
    for (int k = 0; k <= grid.n; ++k) comp[static_cast<std::size_t>(k)] = fn(grid.node(k));
    values.push_back(std::move(comp));
  }
  return SampledPath(grid, std::move(values));
}

SampledPath SampledPath::sample(const Grid& grid, const std::function<double(double)>& fn) {
  return sample(grid, std::vector<std::function<double(double)>>{fn});
}

SampledPath SampledPath::reversed() const {
  SampledPath out = *this;
  for (int i = 0; i < components(); ++i)
    std::reverse(out.values_[static_cast<std::size_t>(i)].begin(),
                 out.values_[static_cast<std::size_t>(i)].end());
  return out;
}

double SampledPath::max_abs() const {
  double m = 0.0;
  for (const auto& comp : values_)
    for (double v : comp) m = std::max(m, std::fabs(v));
  return m;
}

} // namespace frac
