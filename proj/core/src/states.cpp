#include "pdemlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pdemlab/error.hpp"
#include "pdemlab/quadrature.hpp"

namespace pdemlab {

namespace {

double weight_at(const MetricWeight& metric, Convention convention, std::size_t k) {
  return convention == Convention::eta ? metric.eta[k] : 1.0;
}

}  // namespace

CoherentState coherent_state(const LadderPackage& pkg, std::complex<double> alpha, const MetricWeight& metric,
                             Convention convention) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
  if (!(metric.grid == pkg.grid)) throw Error(ErrorCode::GridMismatch, "metric and ladder grids differ");

  const std::size_t n = pkg.grid.size();
  const std::size_t c = pkg.grid.centre();
  const std::complex<double> s = std::numbers::sqrt2 * alpha;

  // Exponent of the weighted density, kept in log form so wide grids with a
  // growing metric do not overflow before normalisation.
  std::vector<std::complex<double>> log_psi(n);
  double log_peak = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    log_psi[k] = std::log(pkg.a_minus[c] / pkg.a_minus[k]) + s * pkg.inv_a2_integral[k] - pkg.phi_over_a2_integral[k];
    const double log_density = 2.0 * log_psi[k].real() + (convention == Convention::eta ? metric.lambda[k] : 0.0);
    log_peak = std::max(log_peak, log_density);
  }
  const double shift = 0.5 * log_peak;

  ComplexField psi(n);
  RealField density(n);
  for (std::size_t k = 0; k < n; ++k) {
    psi[k] = std::exp(log_psi[k] - shift);
    density[k] = weight_at(metric, convention, k) * std::norm(psi[k]);
  }
  if (boundary_mass_ratio(density) > kBoundaryMassLimit)
    throw Error(ErrorCode::NonNormalizable, "weighted density does not decay by x = +-L");
  const double norm = integrate_samples(std::span<const double>(density), pkg.grid);
  if (!std::isfinite(norm) || norm <= 0.0) throw Error(ErrorCode::NonNormalizable, "norm is not finite and positive");

  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : psi) v *= scale;
  return CoherentState{pkg.grid, alpha, std::move(psi), std::complex<double>(std::exp(-shift) * scale, 0.0), convention};
}

std::string_view to_string(OperatorTag tag) noexcept {
  switch (tag) {
    case OperatorTag::Phi: return "Phi";
    case OperatorTag::Pi: return "Pi";
    case OperatorTag::Phi2: return "Phi2";
    case OperatorTag::Pi2: return "Pi2";
    case OperatorTag::x: return "x";
    case OperatorTag::x2: return "x2";
    case OperatorTag::A_minus: return "A_minus";
    case OperatorTag::A_plus: return "A_plus";
    case OperatorTag::A_minus_adjoint: return "A_minus_adjoint";
    case OperatorTag::commutator: return "commutator";
  }
  return "unknown";
}

ComplexField apply_operator(OperatorTag tag, const LadderPackage& pkg, const DeformedObservables& obs,
                            std::span<const std::complex<double>> psi) {
  require_on_grid(psi.size(), pkg.grid, "state");
  auto multiply = [&](auto&& f) {
    ComplexField out(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) out[k] = f(k) * psi[k];
    return out;
  };
  switch (tag) {
    case OperatorTag::Phi: return apply_Phi(obs, psi);
    case OperatorTag::Phi2: return multiply([&](std::size_t k) { return obs.Phi[k] * obs.Phi[k]; });
    case OperatorTag::Pi: return apply_Pi(pkg, psi);
    case OperatorTag::Pi2: {
      const ComplexField once = apply_Pi(pkg, psi);
      return apply_Pi(pkg, once);
    }
    case OperatorTag::x: return multiply([&](std::size_t k) { return pkg.grid.x(k); });
    case OperatorTag::x2: return multiply([&](std::size_t k) { return pkg.grid.x(k) * pkg.grid.x(k); });
    case OperatorTag::A_minus: return apply_A_minus(pkg, psi);
    case OperatorTag::A_plus: return apply_A_plus(pkg, psi);
    case OperatorTag::A_minus_adjoint: return apply_A_minus_adjoint(pkg, psi);
    case OperatorTag::commutator: return apply_Phi_Pi_commutator(pkg, obs, psi);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator tag");
}

std::complex<double> expectation(OperatorTag tag, const CoherentState& state, const LadderPackage& pkg,
                                 const MetricWeight& metric) {
  if (!(state.grid == pkg.grid)) throw Error(ErrorCode::GridMismatch, "state and ladder grids differ");
  const DeformedObservables obs = deformed_observables(pkg);
  const ComplexField applied = apply_operator(tag, pkg, obs, state.samples);
  return inner_product(state.samples, applied, metric, state.convention);
}

std::complex<double> expectation_of_field(std::span<const double> field, const CoherentState& state,
                                          const MetricWeight& metric) {
  require_on_grid(field.size(), state.grid, "field");
  ComplexField applied(field.size());
  for (std::size_t k = 0; k < field.size(); ++k) applied[k] = field[k] * state.samples[k];
  return inner_product(state.samples, applied, metric, state.convention);
}

ExpectationReport variance_report(const CoherentState& state, const LadderPackage& pkg, const MetricWeight& metric) {
  if (!(state.grid == pkg.grid)) throw Error(ErrorCode::GridMismatch, "state and ladder grids differ");
  const DeformedObservables obs = deformed_observables(pkg);
  auto bracket = [&](OperatorTag tag) {
    return inner_product(state.samples, apply_operator(tag, pkg, obs, state.samples), metric, state.convention);
  };
  ExpectationReport r;
  r.convention = state.convention;
  r.mean_Phi = bracket(OperatorTag::Phi).real();
  r.mean_Pi = bracket(OperatorTag::Pi).real();
  r.var_Phi = bracket(OperatorTag::Phi2).real() - r.mean_Phi * r.mean_Phi;
  r.var_Pi = bracket(OperatorTag::Pi2).real() - r.mean_Pi * r.mean_Pi;
  r.mean_commutator = bracket(OperatorTag::commutator);
  r.mean_x = bracket(OperatorTag::x).real();
  r.var_x = bracket(OperatorTag::x2).real() - r.mean_x * r.mean_x;
  return r;
}

double beta_weight(double m, double hbar, double beta2) noexcept { return m / hbar * (1.0 + beta2); }

LadderIdentityResiduals ladder_identity_residuals(const CoherentState& state, const LadderPackage& pkg,
                                                  const MetricWeight& metric) {
  const DeformedObservables obs = deformed_observables(pkg);
  auto bracket = [&](OperatorTag tag) {
    return inner_product(state.samples, apply_operator(tag, pkg, obs, state.samples), metric, state.convention);
  };
  const std::complex<double> mean_u0 = expectation_of_field(pkg.u0, state, metric);
  const std::complex<double> alpha = state.alpha;
  constexpr double r2 = std::numbers::sqrt2;
  LadderIdentityResiduals r;
  r.convention = state.convention;
  r.a_minus = std::abs(bracket(OperatorTag::A_minus) - alpha);
  r.a_minus_adjoint = std::abs(bracket(OperatorTag::A_minus_adjoint) - std::conj(alpha));
  r.a_plus = std::abs(bracket(OperatorTag::A_plus) - std::conj(alpha) - mean_u0 / r2);
  r.mean_Phi = std::abs(bracket(OperatorTag::Phi) - 0.5 * mean_u0 - r2 * alpha.real());
  r.mean_Pi = std::abs(bracket(OperatorTag::Pi) - r2 * alpha.imag());
  return r;
}

}  // namespace pdemlab
