#pragma once

#include <functional>
#include <span>
#include <vector>

namespace frac {

/// Uniform partition of [a,b] with n subintervals (n+1 nodes).
struct Grid {
  Grid(double a, double b, int n);

  double node(int k) const { return a + (b - a) * k / n; }
  double spacing() const { return (b - a) / n; }
  int num_nodes() const { return n + 1; }

  std::vector<double> nodes() const;

  /// Trapezoid quadrature weights (h/2, h, ..., h, h/2).
  std::vector<double> trapezoid_weights() const;

  bool operator==(const Grid&) const = default;

  double a;
  double b;
  int n;
};

/// Vector function sampled at the nodes of a Grid: N components of
/// n+1 real values each. Values supplied at construction are required
/// to be finite.
class SampledPath {
public:
  SampledPath(Grid grid, int components);
  SampledPath(Grid grid, std::vector<std::vector<double>> values);

  /// Samples scalar functions, one per component.
  static SampledPath sample(const Grid& grid,
                            const std::vector<std::function<double(double)>>& fns);
  static SampledPath sample(const Grid& grid, const std::function<double(double)>& fn);

  const Grid& grid() const { return grid_; }
  int components() const { return static_cast<int>(values_.size()); }

  std::span<const double> component(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::vector<double>& component_values(int i) { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& component_values(int i) const { return values_[static_cast<std::size_t>(i)]; }

  double operator()(int component, int node) const {
    return values_[static_cast<std::size_t>(component)][static_cast<std::size_t>(node)];
  }
  double& at(int component, int node) {
    return values_[static_cast<std::size_t>(component)][static_cast<std::size_t>(node)];
  }

  /// Node-reversal x -> a+b-x of every component.
  SampledPath reversed() const;

  /// max_{component,node} |value|
  double max_abs() const;

private:
  Grid grid_;
  std::vector<std::vector<double>> values_;
};

} // namespace frac
