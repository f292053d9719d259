#include "pdemlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pdemlab/error.hpp"

namespace pdemlab {

GaussLegendreRule::GaussLegendreRule(int points) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs at least one point");
  const int n = points;
  nodes_.resize(n);
  weights_.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like first guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes_[i] = -z;
    nodes_[n - 1 - i] = z;
    weights_[i] = weights_[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

double GaussLegendreRule::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
  return sum * half;
}

namespace {

const GaussLegendreRule& panel_rule() {
  static const GaussLegendreRule rule(10);
  return rule;
}

double refine(const std::function<double(double)>& f, double a, double b, double whole, double abs_tol,
              const QuadratureSettings& settings, int depth) {
  const auto& rule = panel_rule();
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  const double both = left + right;
  if (std::abs(both - whole) <= std::max(abs_tol, settings.rel_tol * std::abs(both))) return both;
  if (depth >= settings.max_refinement_depth) {
    std::ostringstream os;
    os.precision(17);
    os << "no convergence on [" << a << ", " << b << "] after " << depth << " bisections";
    throw Error(ErrorCode::QuadratureNonConvergence, os.str());
  }
  return refine(f, a, mid, left, 0.5 * abs_tol, settings, depth + 1) +
         refine(f, mid, b, right, 0.5 * abs_tol, settings, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& settings) {
  if (!(settings.abs_tol > 0.0) || !(settings.rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (a == b) return 0.0;
  const double whole = panel_rule().integrate(f, a, b);
  return refine(f, a, b, whole, settings.abs_tol, settings, 0);
}

RealField cumulative_integral(const std::function<double(double)>& f, const GridSpec& grid,
                              const QuadratureSettings& settings) {
  RealField out(grid.size(), 0.0);
  const std::size_t c = grid.centre();
  for (std::size_t k = c + 1; k < grid.size(); ++k) {
    out[k] = out[k - 1] + integrate_adaptive(f, grid.x(k - 1), grid.x(k), settings);
  }
  for (std::size_t k = c; k-- > 0;) {
    out[k] = out[k + 1] - integrate_adaptive(f, grid.x(k), grid.x(k + 1), settings);
  }
  return out;
}

RealField gregory_weights(std::size_t n, double h) {
  if (n < 7) throw Error(ErrorCode::InvalidArgument, "Gregory quadrature needs at least 7 samples");
  RealField w(n, h);
  constexpr double ends[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
  for (std::size_t i = 0; i < 3; ++i) {
    w[i] = ends[i] * h;
    w[n - 1 - i] = ends[i] * h;
  }
  return w;
}

namespace {

template <typename T>
T weighted_sum(std::span<const T> values, const GridSpec& grid) {
  require_on_grid(values.size(), grid, "integrand");
  const RealField w = gregory_weights(grid.size(), grid.spacing());
  T sum{};
  for (std::size_t i = 0; i < values.size(); ++i) sum += w[i] * values[i];
  return sum;
}

}  // namespace

double integrate_samples(std::span<const double> values, const GridSpec& grid) {
  return weighted_sum(values, grid);
}

std::complex<double> integrate_samples(std::span<const std::complex<double>> values, const GridSpec& grid) {
  return weighted_sum(values, grid);
}

}  // namespace pdemlab
