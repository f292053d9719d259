#pragma once

#include <string_view>

#include "pdemlab/grid.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/profiles.hpp"
#include "pdemlab/states.hpp"

namespace pdemlab {

/// Where the brackets of the closed-form variance chain come from:
///  - quadrature: every <.> evaluated on the state under its convention;
///  - paper_demo: the closed forms quoted for the constant-mass oscillator
///    with omega^2 = 4 beta2, beta1 = -1 and (dx)^2 = 1/(2 beta).
enum class BracketSource { quadrature, paper_demo };

std::string_view to_string(BracketSource source) noexcept;

/// Closed-form variances
///   (dPhi)^2 = (hbar/2)<Phi'/sqrt m> + (hbar/4)<u0'/sqrt m> + (du0)^2/4
///   (dPi)^2  = (hbar/2)<Phi'/sqrt m> - (hbar/4)<u0'/sqrt m>
/// and the uncertainty bounds built from |<[Phi, Pi]>|^2.
struct ClosedFormChain {
  BracketSource source = BracketSource::quadrature;
  double var_Phi_cf = 0.0;
  double var_Pi_cf = 0.0;
  double du0_var = 0.0;
  double commutator_sq = 0.0;
  double bound_paper_sq = 0.0;     // |<[Phi, Pi]>|^2
  double bound_standard_sq = 0.0;  // |<[Phi, Pi]>|^2 / 4
  double product_cf = 0.0;
  // Decomposition of the product:
  //   (hbar^2/4)|<[Phi,Pi]>|^2 + (hbar^2/8)(du0)^2 <phi_-/sqrt m> - (hbar^2/16)<u0'/sqrt m>^2
  double decomposition_commutator_term = 0.0;
  double decomposition_du0_term = 0.0;
  double decomposition_u0_prime_term = 0.0;
  double decomposition_value = 0.0;
  /// Set when a closed-form variance or the product is negative.
  bool non_physical = false;
};

ClosedFormChain closed_form_chain(const Profile& profile, const LadderPackage& pkg, const CoherentState& state,
                                  const MetricWeight& metric);

/// Chain from the quoted oscillator closed forms:
/// (dPi)^2 = hbar, (dPhi)^2 = hbar beta2 + (beta2 - 1) m (dx)^2,
/// |<[Phi,Pi]>|^2 = hbar^2 (1 + beta2)^2, (dx)^2 = 1/(2 beta).
ClosedFormChain paper_demo_chain(double beta2, double m, double hbar);

/// Relative slack used by the violation flags: product < bound - tol * max(1, |bound|).
inline constexpr double kViolationTolerance = 1e-8;

bool violates(double product, double bound_sq) noexcept;

struct UncertaintyReport {
  ClosedFormChain chain;            // source of violated_paper_convention
  ClosedFormChain quadrature_chain; // same formulas with quadrature brackets
  ExpectationReport quadrature;
  double quad_var_Phi = 0.0;
  double quad_var_Pi = 0.0;
  double quad_commutator_sq = 0.0;
  double quad_bound_sq = 0.0;  // standard bound |<[Phi,Pi]>|^2 / 4 from quadrature
  double product_quad = 0.0;
  double delta_Phi = 0.0;  // chain.var_Phi_cf - quad_var_Phi
  double delta_Pi = 0.0;   // chain.var_Pi_cf - quad_var_Pi
  bool violated_paper_convention = false;     // chain.product_cf < chain.bound_paper_sq
  bool violated_standard_convention = false;  // product_quad < quad_bound_sq
  double beta0 = 0.0;
  bool inequality_74_holds = false;
  bool non_physical_closed_form = false;
  double beta2 = 0.0;
};

/// Assembles the report from a chain and quadrature values; flags are pure
/// functions of the stored numbers.
UncertaintyReport make_uncertainty_report(const ClosedFormChain& chain, const ClosedFormChain& quadrature_chain,
                                          const ExpectationReport& quadrature, double beta2);

/// Full pipeline for m constant, V = m omega^2 x^2 / 2 with omega^2 = 4 beta2,
/// beta1 = -1, alpha = 0: profile, metric, ladder, coherent state, variances.
UncertaintyReport ho_case_study(double beta2, double m = 1.0, double hbar = 1.0, const GridSpec& grid = default_grid(),
                                Convention convention = Convention::eta);

/// (beta0 - 1/2)^2 + 1/4 <= -1/beta0 with beta0 = 1 + beta2.
bool inequality_74(double beta2);

}  // namespace pdemlab
