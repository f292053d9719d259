#include "pdemlab/susy.hpp"

#include <algorithm>
#include <cmath>

#include "pdemlab/error.hpp"
#include "pdemlab/stencil.hpp"

namespace pdemlab {

double u_at(const Profile& profile, double x) {
  const double m = profile.m(x);
  return profile.dm(x) / m + 2.0 / profile.hbar() * profile.sigma() * x * m;
}

double Ve_at(const Profile& profile, double x) {
  const double m = profile.m(x);
  const double dm = profile.dm(x);
  const double log_curv = profile.d2m(x) / m - dm * dm / (m * m);  // (m'/m)'
  const double hbar = profile.hbar();
  return hbar * profile.params().beta1 + profile.V(x) - hbar * hbar / (2.0 * m) * log_curv;
}

double ve_at(const Profile& profile, double x) {
  const double hbar = profile.hbar();
  return 2.0 * profile.m(x) * Ve_at(profile, x) / (hbar * hbar);
}

EffectiveFields effective_fields(const Profile& profile, const GridSpec& grid) {
  return EffectiveFields{grid, sample(grid, [&](double x) { return u_at(profile, x); }),
                         sample(grid, [&](double x) { return Ve_at(profile, x); }),
                         sample(grid, [&](double x) { return ve_at(profile, x); })};
}

RiccatiForm k_riccati_form(const Profile& profile, double mu) {
  return RiccatiForm{[](double) { return 1.0; }, [&profile](double x) { return u_at(profile, x); },
                     [&profile, mu](double x) { return ve_at(profile, x) + mu * profile.m(x); }, profile.support()};
}

RiccatiSolution solve_K_riccati(const EffectiveFields& fields, const Profile& profile, double mu, double ic_value,
                                const GridSpec& grid, const RiccatiSettings& settings) {
  if (!(fields.grid == grid)) throw Error(ErrorCode::GridMismatch, "effective fields sampled on a different grid");
  return solve_riccati(k_riccati_form(profile, mu), grid, ic_value, mu, settings);
}

SusyPackage susy_package(const EffectiveFields& fields, const RiccatiSolution& K, double a0, const Profile& profile) {
  if (a0 == 0.0 || !std::isfinite(a0)) throw Error(ErrorCode::InvalidArgument, "a0 must be a nonzero real");
  const GridSpec& grid = fields.grid;
  require_on_grid(K.field_samples.size(), grid, "K");
  const std::size_t n = grid.size();
  const double hbar = profile.hbar();
  const double sigma = profile.sigma();
  SusyPackage pkg{grid, a0, RealField(n), RealField(n), RealField(n), RealField(n), RealField(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double x = grid.x(k);
    const double m = profile.m(x);
    const double dm = profile.dm(x);
    const double d2m = profile.d2m(x);
    const double a2 = a0 * a0 / std::sqrt(m);
    const double da2 = -0.5 * a0 * a0 * dm / (m * std::sqrt(m));
    const double d2a2 = a0 * a0 * (0.75 * dm * dm / (m * m * std::sqrt(m)) - 0.5 * d2m / (m * std::sqrt(m)));
    const double Kv = K.field_samples[k];
    const double dK = K.derivative_samples[k];
    pkg.a[k] = a0 * std::pow(m, -0.25);
    pkg.a_squared[k] = a2;
    pkg.phi[k] = Kv * a2 - 0.5 * da2;
    pkg.phi_prime[k] = dK * a2 + Kv * da2 - 0.5 * d2a2;
    pkg.partner_potential[k] = fields.V_e[k] + hbar * hbar * pkg.phi_prime[k] / (a0 * a0 * std::sqrt(m)) +
                               hbar * sigma * (1.0 + dm / (2.0 * m) * x);
  }
  return pkg;
}

SusyConsistency susy_consistency(const Profile& profile, const EffectiveFields& fields, const RiccatiSolution& K,
                                 const SusyPackage& package) {
  const GridSpec& grid = fields.grid;
  const double h = grid.spacing();
  const std::size_t n = grid.size();
  const double hbar = profile.hbar();
  RealField phi_a(n), u_a2(n);
  for (std::size_t k = 0; k < n; ++k) {
    phi_a[k] = K.field_samples[k] * package.a_squared[k];
    u_a2[k] = fields.u[k] * package.a_squared[k];
  }
  const auto da2 = differentiate(package.a_squared, h, 6);
  const auto d2a2 = differentiate2(package.a_squared, h);
  const auto dphi_a = differentiate(phi_a, h, 6);
  const auto d2phi_a = differentiate2(phi_a, h);
  const auto du_a2 = differentiate(u_a2, h, 6);
  const auto dVe = differentiate(fields.V_e, h, 6);

  SusyConsistency out;
  for (std::size_t k = 3; k + 3 < n; ++k) {
    const double x = grid.x(k);
    const double m = profile.m(x);
    const double dinv_m = -profile.dm(x) / (m * m);
    const double a2 = package.a_squared[k];
    const double dV = package.partner_potential[k] - fields.V_e[k];
    out.scale_equation = std::max(out.scale_equation, std::abs(2.0 / m * da2[k] - dinv_m * a2));
    out.superpotential =
        std::max(out.superpotential, std::abs(package.phi[k] - (K.field_samples[k] * a2 - 0.5 * da2[k])));
    out.partner_equation = std::max(
        out.partner_equation, std::abs(2.0 * m * a2 / (hbar * hbar) * dV - (du_a2[k] + 2.0 * dphi_a[k] + d2a2[k])));
    out.phi_a_equation =
        std::max(out.phi_a_equation, std::abs(hbar * hbar / (2.0 * m) * (fields.u[k] * dphi_a[k] - d2phi_a[k]) +
                                              dV * phi_a[k] - a2 * dVe[k]));
  }
  return out;
}

}  // namespace pdemlab
