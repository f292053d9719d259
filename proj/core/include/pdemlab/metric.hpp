#pragma once

#include <complex>
#include <span>
#include <string_view>

#include "pdemlab/grid.hpp"
#include "pdemlab/profiles.hpp"
#include "pdemlab/quadrature.hpp"

namespace pdemlab {

/// Inner-product convention: `eta` weights by the metric e^Lambda, `flat` is
/// the ordinary L2 product.
enum class Convention { eta, flat };

std::string_view to_string(Convention c) noexcept;
/// Accepts "eta" or "flat"; throws InvalidArgument otherwise.
Convention parse_convention(std::string_view text);

/// Lambda(x) = -(2/hbar)(beta1+beta2) * integral_0^x y m(y) dy, with Lambda(0) = 0.
double lambda_of(const Profile& profile, double x, const QuadratureSettings& settings = {});

/// Sampled metric weight. eta[k] == exp(lambda[k]) exactly.
struct MetricWeight {
  GridSpec grid;
  RealField lambda;
  RealField eta;
};

MetricWeight build_metric(const Profile& profile, const GridSpec& grid, const QuadratureSettings& settings = {});

/// Wraps externally supplied Lambda samples (e.g. a deliberately corrupted
/// metric for negative controls).
MetricWeight metric_from_lambda(const GridSpec& grid, RealField lambda);

/// integral of conj(f) w g dx with w = eta or 1.
std::complex<double> inner_product(std::span<const std::complex<double>> f, std::span<const std::complex<double>> g,
                                   const MetricWeight& metric, Convention convention);

// Exact-match overload so unqualified calls on vectors don't find std::inner_product.
inline std::complex<double> inner_product(const ComplexField& f, const ComplexField& g, const MetricWeight& metric,
                                          Convention convention) {
  return inner_product(std::span<const std::complex<double>>(f), std::span<const std::complex<double>>(g), metric,
                       convention);
}

/// max(|d(-L)|, |d(L)|) / max |d|: how much of a density is left at the edge
/// of the truncated domain. 0 for an identically zero density.
double boundary_mass_ratio(std::span<const double> density);

}  // namespace pdemlab
