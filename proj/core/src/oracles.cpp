#include "pdemlab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pdemlab/error.hpp"

namespace pdemlab {

double gaussian_moment(double c, int k) {
  if (!(c > 0.0)) throw Error(ErrorCode::DomainError, "Gaussian exponent must be positive");
  if (k < 0) throw Error(ErrorCode::DomainError, "moment order must be non-negative");
  if (k % 2 == 1) return 0.0;
  double value = 1.0;
  for (int j = 2; j <= k; j += 2) value *= (j - 1) / (2.0 * c);
  return value;
}

ComplexField hermite_gaussian(const GridSpec& grid, int n, double c) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Hermite degree must be non-negative");
  if (!(c > 0.0)) throw Error(ErrorCode::DomainError, "envelope exponent must be positive");
  const double scale = std::sqrt(2.0 * c);
  ComplexField out(grid.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double t = scale * x;
    double h0 = 1.0, h1 = t;
    double hn = n == 0 ? h0 : h1;
    for (int j = 2; j <= n; ++j) {
      hn = t * h1 - (j - 1) * h0;
      h0 = h1;
      h1 = hn;
    }
    const double v = hn * std::exp(-c * x * x);
    out[k] = v;
    peak = std::max(peak, std::abs(v));
  }
  for (auto& v : out) v /= peak;
  return out;
}

std::vector<ComplexField> hermite_gaussian_basket(const GridSpec& grid, int count, double c) {
  std::vector<ComplexField> basket;
  for (int n = 0; n < count; ++n) basket.push_back(hermite_gaussian(grid, n, c));
  return basket;
}

double metric_envelope(const MetricWeight& metric) {
  double worst = 0.0;
  for (std::size_t k = 0; k < metric.grid.size(); ++k) {
    const double x = metric.grid.x(k);
    if (x != 0.0) worst = std::max(worst, -metric.lambda[k] / (x * x));
  }
  return 1.0 + worst;
}

std::vector<ComplexField> test_function_basket(const GridSpec& grid, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  std::vector<ComplexField> basket;
  for (int j = 0; j < count; ++j) {
    std::complex<double> coeff[4];
    for (auto& a : coeff) a = {unit(rng), unit(rng)};
    const double w = width(rng);
    const double s = unit(rng);
    ComplexField f(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double x = grid.x(k);
      const std::complex<double> poly = coeff[0] + x * (coeff[1] + x * (coeff[2] + x * coeff[3]));
      f[k] = poly * std::exp(-w * (x - s) * (x - s));
    }
    basket.push_back(std::move(f));
  }
  return basket;
}

std::string_view to_string(IdentityTag tag) noexcept {
  switch (tag) {
    case IdentityTag::eq48: return "eq48";
    case IdentityTag::eq49: return "eq49";
    case IdentityTag::eq50: return "eq50";
    case IdentityTag::eq51: return "eq51";
    case IdentityTag::eq52: return "eq52";
  }
  return "unknown";
}

IdentityTag parse_identity_tag(std::string_view text) {
  for (auto tag : {IdentityTag::eq48, IdentityTag::eq49, IdentityTag::eq50, IdentityTag::eq51, IdentityTag::eq52})
    if (to_string(tag) == text) return tag;
  throw Error(ErrorCode::InvalidArgument, "unknown identity tag '" + std::string(text) + "'");
}

namespace {

using Span = std::span<const std::complex<double>>;

ComplexField scale_by(std::span<const double> f, Span psi, double factor = 1.0) {
  ComplexField out(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) out[k] = factor * f[k] * psi[k];
  return out;
}

ComplexField identity_defect(const LadderPackage& pkg, IdentityTag tag, Span psi) {
  constexpr double r2 = std::numbers::sqrt2;
  const std::size_t n = psi.size();
  const DeformedObservables obs = deformed_observables(pkg);
  // hbar/sqrt(m) = a_-^2
  const RealField& a2 = pkg.a_minus_sq;
  auto Am = [&](Span f) { return apply_A_minus(pkg, f); };
  auto Ap = [&](Span f) { return apply_A_plus(pkg, f); };
  auto Ad = [&](Span f) { return apply_A_minus_adjoint(pkg, f); };
  ComplexField out(n);
  switch (tag) {
    case IdentityTag::eq48: {
      const ComplexField lhs = Ap(psi);
      const ComplexField ad = Ad(psi);
      for (std::size_t k = 0; k < n; ++k) out[k] = lhs[k] - (pkg.u0[k] / r2 * psi[k] + ad[k]);
      break;
    }
    case IdentityTag::eq49: {
      const ComplexField ad = Ad(psi);
      const ComplexField ad_u = Ad(scale_by(pkg.u0, psi));
      for (std::size_t k = 0; k < n; ++k)
        out[k] = (pkg.u0[k] * ad[k] - ad_u[k]) - a2[k] / r2 * pkg.u0_prime[k] * psi[k];
      break;
    }
    case IdentityTag::eq50: {
      const ComplexField am_ad = Am(Ad(psi));
      const ComplexField ad_am = Ad(Am(psi));
      for (std::size_t k = 0; k < n; ++k)
        out[k] = am_ad[k] - ad_am[k] - a2[k] * pkg.phi_minus.derivative_samples[k] * psi[k];
      break;
    }
    case IdentityTag::eq51: {
      const ComplexField lhs = Ap(Ap(psi));
      const ComplexField ad2 = Ad(Ad(psi));
      const ComplexField ad_u = Ad(scale_by(pkg.u0, psi));
      for (std::size_t k = 0; k < n; ++k)
        out[k] = lhs[k] - (ad2[k] + r2 * ad_u[k] +
                           0.5 * (pkg.u0[k] * pkg.u0[k] + a2[k] * pkg.u0_prime[k]) * psi[k]);
      break;
    }
    case IdentityTag::eq52: {
      const ComplexField am_ap = Am(Ap(psi));
      const ComplexField ap_am = Ap(Am(psi));
      const ComplexField am = Am(psi);
      const ComplexField ad_am = Ad(am);
      for (std::size_t k = 0; k < n; ++k)
        out[k] = am_ap[k] + ap_am[k] -
                 (2.0 * ad_am[k] + r2 * pkg.u0[k] * am[k] + a2[k] * obs.Phi_prime[k] * psi[k]);
      break;
    }
  }
  return out;
}

}  // namespace

double operator_identity_bruteforce(const LadderPackage& pkg, IdentityTag tag,
                                    std::span<const ComplexField> test_functions, std::size_t layers) {
  double worst = 0.0;
  for (const auto& psi : test_functions) {
    require_on_grid(psi.size(), pkg.grid, "test function");
    const ComplexField defect = identity_defect(pkg, tag, psi);
    for (std::size_t k = layers; k + layers < defect.size(); ++k) worst = std::max(worst, std::abs(defect[k]));
  }
  return worst;
}

}  // namespace pdemlab
