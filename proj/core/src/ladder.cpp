#include "pdemlab/ladder.hpp"

#include <cmath>
#include <numbers>

#include "pdemlab/error.hpp"
#include "pdemlab/quadrature.hpp"
#include "pdemlab/stencil.hpp"
#include "pdemlab/susy.hpp"

namespace pdemlab {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

double u0_at(const Profile& profile, double x) { return 2.0 * profile.sigma() * x * std::sqrt(profile.m(x)); }

double u0_prime_at(const Profile& profile, double x) {
  const double sm = std::sqrt(profile.m(x));
  return 2.0 * profile.sigma() * (sm + x * profile.dm(x) / (2.0 * sm));
}

double Ve_tilde_at(const Profile& profile, double x) {
  const double m = profile.m(x);
  const double dm = profile.dm(x);
  const double hbar = profile.hbar();
  return 2.0 * Ve_at(profile, x) + 0.5 * hbar * profile.sigma() * x * dm / m +
         hbar * hbar / (4.0 * m * m) * (7.0 * dm * dm / (4.0 * m) - profile.d2m(x));
}

RiccatiForm phi_minus_riccati_form(const Profile& profile) {
  return RiccatiForm{[&profile](double x) { return std::sqrt(profile.m(x)) / profile.hbar(); },
                     [&profile](double x) { return u0_at(profile, x); },
                     [&profile](double x) { return Ve_tilde_at(profile, x); }, profile.support()};
}

LadderPackage build_ladder(const Profile& profile, const GridSpec& grid, double ic_value,
                           const RiccatiSettings& settings) {
  const double hbar = profile.hbar();
  LadderPackage pkg{.grid = grid, .hbar = hbar};
  pkg.a_minus = sample(grid, [&](double x) { return std::sqrt(hbar) * std::pow(profile.m(x), -0.25); });
  pkg.a_minus_sq = sample(grid, [&](double x) { return hbar / std::sqrt(profile.m(x)); });
  pkg.u0 = sample(grid, [&](double x) { return u0_at(profile, x); });
  pkg.u0_prime = sample(grid, [&](double x) { return u0_prime_at(profile, x); });
  pkg.Ve_tilde = sample(grid, [&](double x) { return Ve_tilde_at(profile, x); });
  pkg.phi_minus = solve_riccati(phi_minus_riccati_form(profile), grid, ic_value, 0.0, settings);
  pkg.phi_plus.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) pkg.phi_plus[k] = pkg.phi_minus.field_samples[k] + pkg.u0[k];

  pkg.inv_a2_integral = cumulative_integral([&](double x) { return std::sqrt(profile.m(x)) / hbar; }, grid);

  // phi_-/a_-^2 is only known at the nodes, together with its derivative from
  // the Riccati right-hand side: endpoint-corrected trapezoid per cell.
  const std::size_t n = grid.size();
  RealField g(n), dg(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = grid.x(k);
    const double sm = std::sqrt(profile.m(x));
    const double phi = pkg.phi_minus.field_samples[k];
    g[k] = phi * sm / hbar;
    dg[k] = (pkg.phi_minus.derivative_samples[k] * sm + phi * profile.dm(x) / (2.0 * sm)) / hbar;
  }
  const double h = grid.spacing();
  auto cell = [&](std::size_t i) { return 0.5 * h * (g[i] + g[i + 1]) + h * h / 12.0 * (dg[i] - dg[i + 1]); };
  pkg.phi_over_a2_integral.assign(n, 0.0);
  const std::size_t c = grid.centre();
  for (std::size_t k = c + 1; k < n; ++k) pkg.phi_over_a2_integral[k] = pkg.phi_over_a2_integral[k - 1] + cell(k - 1);
  for (std::size_t k = c; k-- > 0;) pkg.phi_over_a2_integral[k] = pkg.phi_over_a2_integral[k + 1] - cell(k);
  return pkg;
}

ComplexField apply_scaled_derivative(const LadderPackage& pkg, std::span<const std::complex<double>> psi) {
  require_on_grid(psi.size(), pkg.grid, "state");
  ComplexField scaled(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) scaled[k] = pkg.a_minus[k] * psi[k];
  ComplexField d = differentiate(std::span<const std::complex<double>>(scaled), pkg.grid.spacing(), pkg.stencil_order);
  for (std::size_t k = 0; k < psi.size(); ++k) d[k] *= pkg.a_minus[k];
  return d;
}

ComplexField apply_A_minus(const LadderPackage& pkg, std::span<const std::complex<double>> psi) {
  ComplexField out = apply_scaled_derivative(pkg, psi);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = kInvSqrt2 * (out[k] + pkg.phi_minus.field_samples[k] * psi[k]);
  return out;
}

ComplexField apply_A_plus(const LadderPackage& pkg, std::span<const std::complex<double>> psi) {
  ComplexField out = apply_scaled_derivative(pkg, psi);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = kInvSqrt2 * (-out[k] + pkg.phi_plus[k] * psi[k]);
  return out;
}

ComplexField apply_A_minus_adjoint(const LadderPackage& pkg, std::span<const std::complex<double>> psi) {
  ComplexField out = apply_scaled_derivative(pkg, psi);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = kInvSqrt2 * (-out[k] + pkg.phi_minus.field_samples[k] * psi[k]);
  return out;
}

DeformedObservables deformed_observables(const LadderPackage& pkg) {
  const std::size_t n = pkg.grid.size();
  DeformedObservables obs{pkg.grid, RealField(n), RealField(n), RealField(n)};
  for (std::size_t k = 0; k < n; ++k) {
    obs.Phi[k] = 0.5 * (pkg.phi_minus.field_samples[k] + pkg.phi_plus[k]);
    obs.Phi_prime[k] = pkg.phi_minus.derivative_samples[k] + 0.5 * pkg.u0_prime[k];
    // a_-^2 = hbar/sqrt(m)
    obs.commutator_field[k] = pkg.a_minus_sq[k] * obs.Phi_prime[k];
  }
  return obs;
}

ComplexField apply_Phi(const DeformedObservables& obs, std::span<const std::complex<double>> psi) {
  require_on_grid(psi.size(), obs.grid, "state");
  ComplexField out(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) out[k] = obs.Phi[k] * psi[k];
  return out;
}

ComplexField apply_Pi(const LadderPackage& pkg, std::span<const std::complex<double>> psi) {
  ComplexField out = apply_scaled_derivative(pkg, psi);
  const std::complex<double> minus_i(0.0, -1.0);
  for (auto& v : out) v *= minus_i;
  return out;
}

ComplexField apply_Phi_Pi_commutator(const LadderPackage& pkg, const DeformedObservables& obs,
                                     std::span<const std::complex<double>> psi) {
  const ComplexField pi_psi = apply_Pi(pkg, psi);
  const ComplexField phi_psi = apply_Phi(obs, psi);
  const ComplexField pi_phi_psi = apply_Pi(pkg, phi_psi);
  ComplexField out(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) out[k] = obs.Phi[k] * pi_psi[k] - pi_phi_psi[k];
  return out;
}

}  // namespace pdemlab
