#pragma once

#include <complex>
#include <string_view>

#include "pdemlab/grid.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/metric.hpp"

namespace pdemlab {

/// Normalised eigenstate of A_- sampled on the ladder grid.
struct CoherentState {
  GridSpec grid;
  std::complex<double> alpha;
  ComplexField samples;
  /// Factor applied to the unnormalised closed form
  /// (a_-(0)/a_-(x)) exp(integral_0^x (sqrt2 alpha - phi_-)/a_-^2).
  std::complex<double> c0;
  Convention convention = Convention::eta;
};

/// Throws NonNormalizable when the weighted density at x = +-L exceeds 1e-10
/// of its maximum, or when the norm is not finite.
CoherentState coherent_state(const LadderPackage& pkg, std::complex<double> alpha, const MetricWeight& metric,
                             Convention convention);

inline constexpr double kBoundaryMassLimit = 1e-10;

enum class OperatorTag { Phi, Pi, Phi2, Pi2, x, x2, A_minus, A_plus, A_minus_adjoint, commutator };

std::string_view to_string(OperatorTag tag) noexcept;

/// O psi for every tag, with the operators in their flat differential form.
ComplexField apply_operator(OperatorTag tag, const LadderPackage& pkg, const DeformedObservables& obs,
                            std::span<const std::complex<double>> psi);

/// <psi| w O |psi> with w the state's convention weight.
std::complex<double> expectation(OperatorTag tag, const CoherentState& state, const LadderPackage& pkg,
                                 const MetricWeight& metric);

/// <psi| w f |psi> for a multiplication operator f.
std::complex<double> expectation_of_field(std::span<const double> field, const CoherentState& state,
                                          const MetricWeight& metric);

/// Means and variances by quadrature; variances are <O^2> - <O>^2 taken from
/// the real parts, reported without clamping.
struct ExpectationReport {
  double mean_Phi = 0.0;
  double mean_Pi = 0.0;
  double var_Phi = 0.0;
  double var_Pi = 0.0;
  std::complex<double> mean_commutator;
  double mean_x = 0.0;
  double var_x = 0.0;
  Convention convention = Convention::eta;
};

ExpectationReport variance_report(const CoherentState& state, const LadderPackage& pkg, const MetricWeight& metric);

/// Gaussian width (m/hbar)(1 + beta2) of the demo ground state density.
double beta_weight(double m, double hbar, double beta2) noexcept;

/// Deviations of the quadrature brackets from the ladder expectation
/// identities; all are expected to vanish under the flat product only.
struct LadderIdentityResiduals {
  double a_minus = 0.0;          // |<A_-> - alpha|
  double a_minus_adjoint = 0.0;  // |<A_-^dagger> - conj(alpha)|
  double a_plus = 0.0;           // |<A_+> - conj(alpha) - <u0>/sqrt2|
  double mean_Phi = 0.0;         // |<Phi> - <u0>/2 - sqrt2 Re alpha|
  double mean_Pi = 0.0;          // |<Pi> - sqrt2 Im alpha|
  Convention convention = Convention::eta;
};

LadderIdentityResiduals ladder_identity_residuals(const CoherentState& state, const LadderPackage& pkg,
                                                  const MetricWeight& metric);

}  // namespace pdemlab
