#include "pdemlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdemlab/error.hpp"

namespace pdemlab {

std::string_view to_string(Convention c) noexcept { return c == Convention::eta ? "eta" : "flat"; }

Convention parse_convention(std::string_view text) {
  if (text == "eta") return Convention::eta;
  if (text == "flat") return Convention::flat;
  throw Error(ErrorCode::InvalidArgument, "unknown inner-product convention '" + std::string(text) + "'");
}

double lambda_of(const Profile& profile, double x, const QuadratureSettings& settings) {
  if (std::abs(x) > profile.support()) {
    throw Error(ErrorCode::DomainError, "lambda_of evaluated outside the profile support");
  }
  if (is_hermitian(profile)) return 0.0;
  const double integral = integrate_adaptive([&profile](double y) { return y * profile.m(y); }, 0.0, x, settings);
  return -2.0 / profile.hbar() * profile.sigma() * integral;
}

MetricWeight build_metric(const Profile& profile, const GridSpec& grid, const QuadratureSettings& settings) {
  RealField lambda(grid.size(), 0.0);
  if (!is_hermitian(profile)) {
    lambda = cumulative_integral([&profile](double y) { return y * profile.m(y); }, grid, settings);
    const double scale = -2.0 / profile.hbar() * profile.sigma();
    for (double& v : lambda) v *= scale;
  }
  return metric_from_lambda(grid, std::move(lambda));
}

MetricWeight metric_from_lambda(const GridSpec& grid, RealField lambda) {
  require_on_grid(lambda.size(), grid, "lambda");
  RealField eta(lambda.size());
  std::transform(lambda.begin(), lambda.end(), eta.begin(), [](double l) { return std::exp(l); });
  return MetricWeight{grid, std::move(lambda), std::move(eta)};
}

std::complex<double> inner_product(std::span<const std::complex<double>> f, std::span<const std::complex<double>> g,
                                   const MetricWeight& metric, Convention convention) {
  require_on_grid(f.size(), metric.grid, "left state");
  require_on_grid(g.size(), metric.grid, "right state");
  ComplexField integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = convention == Convention::eta ? metric.eta[i] : 1.0;
    integrand[i] = std::conj(f[i]) * w * g[i];
  }
  return integrate_samples(integrand, metric.grid);
}

double boundary_mass_ratio(std::span<const double> density) {
  if (density.empty()) return 0.0;
  double peak = 0.0;
  for (double d : density) peak = std::max(peak, std::abs(d));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(density.front()), std::abs(density.back())) / peak;
}

}  // namespace pdemlab
