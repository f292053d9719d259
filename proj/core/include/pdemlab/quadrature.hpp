#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "pdemlab/grid.hpp"

namespace pdemlab {

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinement_depth = 30;
};

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendreRule {
 public:
  explicit GaussLegendreRule(int points);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Fixed-order integral of f over [a, b].
  double integrate(const std::function<double(double)>& f, double a, double b) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Adaptive bisection on Gauss-Legendre panels: a panel is accepted once the
/// one-panel and two-half-panel estimates agree to max(abs_tol, rel_tol*|I|).
/// Throws QuadratureNonConvergence when max_refinement_depth is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& settings = {});

/// F(x_k) = integral from 0 to x_k of f, one adaptive panel per grid cell,
/// accumulated outward from the centre node (F = 0 there).
RealField cumulative_integral(const std::function<double(double)>& f, const GridSpec& grid,
                              const QuadratureSettings& settings = {});

/// Trapezoid weights with fourth-order Gregory end corrections
/// (3/8, 7/6, 23/24, 1, ..., 1, 23/24, 7/6, 3/8) * h. Needs n >= 7.
RealField gregory_weights(std::size_t n, double h);

/// Integral of sampled values over the whole grid with gregory_weights.
double integrate_samples(std::span<const double> values, const GridSpec& grid);
std::complex<double> integrate_samples(std::span<const std::complex<double>> values, const GridSpec& grid);

}  // namespace pdemlab
