#include "pdemlab/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "pdemlab/error.hpp"

namespace pdemlab {

namespace {

void finish_chain(ClosedFormChain& c, double hbar, double phi_minus_bracket, double u0_prime_bracket) {
  c.bound_paper_sq = c.commutator_sq;
  c.bound_standard_sq = 0.25 * c.commutator_sq;
  c.product_cf = c.var_Phi_cf * c.var_Pi_cf;
  const double h2 = hbar * hbar;
  c.decomposition_commutator_term = 0.25 * h2 * c.commutator_sq;
  c.decomposition_du0_term = 0.125 * h2 * c.du0_var * phi_minus_bracket;
  c.decomposition_u0_prime_term = -h2 / 16.0 * u0_prime_bracket * u0_prime_bracket;
  c.decomposition_value = c.decomposition_commutator_term + c.decomposition_du0_term + c.decomposition_u0_prime_term;
  c.non_physical = c.var_Phi_cf < 0.0 || c.var_Pi_cf < 0.0 || c.product_cf < 0.0;
}

}  // namespace

std::string_view to_string(BracketSource source) noexcept {
  return source == BracketSource::quadrature ? "quadrature" : "paper_demo";
}

ClosedFormChain closed_form_chain(const Profile& profile, const LadderPackage& pkg, const CoherentState& state,
                                  const MetricWeight& metric) {
  const double hbar = profile.hbar();
  const DeformedObservables obs = deformed_observables(pkg);
  const std::size_t n = pkg.grid.size();
  RealField phi_prime_over(n), u0_prime_over(n), phi_minus_over(n), u0_sq(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double sm = std::sqrt(profile.m(pkg.grid.x(k)));
    phi_prime_over[k] = obs.Phi_prime[k] / sm;
    u0_prime_over[k] = pkg.u0_prime[k] / sm;
    phi_minus_over[k] = pkg.phi_minus.field_samples[k] / sm;
    u0_sq[k] = pkg.u0[k] * pkg.u0[k];
  }
  auto mean = [&](const RealField& f) { return expectation_of_field(f, state, metric).real(); };
  const double b_phi = mean(phi_prime_over);
  const double b_u0p = mean(u0_prime_over);
  const double mean_u0 = mean(pkg.u0);

  ClosedFormChain c;
  c.source = BracketSource::quadrature;
  c.du0_var = mean(u0_sq) - mean_u0 * mean_u0;
  c.var_Phi_cf = 0.5 * hbar * b_phi + 0.25 * hbar * b_u0p + 0.25 * c.du0_var;
  c.var_Pi_cf = 0.5 * hbar * b_phi - 0.25 * hbar * b_u0p;
  // <[Phi, Pi]> = i hbar <Phi'/sqrt m>
  c.commutator_sq = hbar * hbar * b_phi * b_phi;
  finish_chain(c, hbar, mean(phi_minus_over), b_u0p);
  return c;
}

ClosedFormChain paper_demo_chain(double beta2, double m, double hbar) {
  const double beta = beta_weight(m, hbar, beta2);
  const double dx2 = 1.0 / (2.0 * beta);
  ClosedFormChain c;
  c.source = BracketSource::paper_demo;
  c.var_Pi_cf = hbar;
  c.var_Phi_cf = hbar * beta2 + (beta2 - 1.0) * m * dx2;
  c.commutator_sq = hbar * hbar * (1.0 + beta2) * (1.0 + beta2);
  // u0 = 2 (beta2 - 1) sqrt(m) x, <x> = 0; <phi_-/sqrt m> = 2<x> = 0.
  c.du0_var = 4.0 * (beta2 - 1.0) * (beta2 - 1.0) * m * dx2;
  const double u0_prime_bracket = 2.0 * (beta2 - 1.0);
  finish_chain(c, hbar, 0.0, u0_prime_bracket);
  return c;
}

bool violates(double product, double bound_sq) noexcept {
  return product < bound_sq - kViolationTolerance * std::max(1.0, std::abs(bound_sq));
}

UncertaintyReport make_uncertainty_report(const ClosedFormChain& chain, const ClosedFormChain& quadrature_chain,
                                          const ExpectationReport& quadrature, double beta2) {
  UncertaintyReport r;
  r.chain = chain;
  r.quadrature_chain = quadrature_chain;
  r.quadrature = quadrature;
  r.beta2 = beta2;
  r.quad_var_Phi = quadrature.var_Phi;
  r.quad_var_Pi = quadrature.var_Pi;
  r.quad_commutator_sq = std::norm(quadrature.mean_commutator);
  r.quad_bound_sq = 0.25 * r.quad_commutator_sq;
  r.product_quad = r.quad_var_Phi * r.quad_var_Pi;
  r.delta_Phi = chain.var_Phi_cf - r.quad_var_Phi;
  r.delta_Pi = chain.var_Pi_cf - r.quad_var_Pi;
  r.violated_paper_convention = violates(chain.product_cf, chain.bound_paper_sq);
  r.violated_standard_convention = violates(r.product_quad, r.quad_bound_sq);
  r.beta0 = 1.0 + beta2;
  r.inequality_74_holds = inequality_74(beta2);
  r.non_physical_closed_form = chain.non_physical;
  return r;
}

UncertaintyReport ho_case_study(double beta2, double m, double hbar, const GridSpec& grid, Convention convention) {
  if (!(beta2 >= 0.0) || !std::isfinite(beta2)) throw Error(ErrorCode::InvalidArgument, "beta2 must be >= 0");
  if (!(m > 0.0) || !(hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "m and hbar must be positive");
  const PTParameters params{-1.0, beta2, hbar};
  const Profile profile =
      make_profile(constant_mass(m), harmonic_potential(m, 2.0 * std::sqrt(beta2)), params, grid);
  const MetricWeight metric = build_metric(profile, grid);
  const LadderPackage pkg = build_ladder(profile, grid);
  const CoherentState state = coherent_state(pkg, {0.0, 0.0}, metric, convention);
  const ExpectationReport quad = variance_report(state, pkg, metric);
  return make_uncertainty_report(paper_demo_chain(beta2, m, hbar), closed_form_chain(profile, pkg, state, metric),
                                 quad, beta2);
}

bool inequality_74(double beta2) {
  if (!(beta2 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "beta2 must be >= 0");
  const double b0 = 1.0 + beta2;
  return (b0 - 0.5) * (b0 - 0.5) + 0.25 <= -1.0 / b0;
}

}  // namespace pdemlab
