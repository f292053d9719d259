#pragma once

#include <span>
#include <string_view>

#include "pdemlab/grid.hpp"
#include "pdemlab/profiles.hpp"
#include "pdemlab/riccati.hpp"

namespace pdemlab {

/// a_+ is never stored: it is i * a_-, recorded by this tag.
inline constexpr std::string_view kAPlusTag = "i*a_minus";

/// u0 = 2 (beta1+beta2) x sqrt(m) = phi_+ - phi_-.
double u0_at(const Profile& profile, double x);
double u0_prime_at(const Profile& profile, double x);
/// Right-hand side of the phi_- Riccati equation:
/// 2 V_e + (hbar/2)(beta1+beta2) x m'/m + (hbar^2 / 4m^2)(7 m'^2 / 4m - m'').
double Ve_tilde_at(const Profile& profile, double x);

/// -(hbar/sqrt m) phi' + u0 phi + phi^2 = V~_e as a RiccatiForm
/// (c = sqrt(m)/hbar, p = u0, q = V~_e).
RiccatiForm phi_minus_riccati_form(const Profile& profile);

/// Factorisation H = A_+ A_- with
///   A_- = (a_- d/dx a_- + phi_-)/sqrt 2,  A_+ = (-a_- d/dx a_- + phi_+)/sqrt 2.
struct LadderPackage {
  GridSpec grid;
  double hbar = 1.0;
  RealField a_minus{};     // sqrt(hbar) m^(-1/4)
  RealField a_minus_sq{};  // hbar / sqrt(m)
  RealField u0{};
  RealField u0_prime{};
  RiccatiSolution phi_minus{};
  RealField phi_plus{};
  RealField Ve_tilde{};
  double lambda0 = 0.0;  // ground-state energy offset, fixed to zero
  /// integral_0^x dt / a_-^2 and integral_0^x phi_- / a_-^2 dt; the
  /// coherent states are closed-form exponentials of these.
  RealField inv_a2_integral{};
  RealField phi_over_a2_integral{};
  int stencil_order = 6;  // first-derivative order used by the operator actions (4 or 6)
};

LadderPackage build_ladder(const Profile& profile, const GridSpec& grid, double ic_value = 0.0,
                           const RiccatiSettings& settings = {});

/// a_-(a_- psi)' by central differences of pkg.stencil_order.
ComplexField apply_scaled_derivative(const LadderPackage& pkg, std::span<const std::complex<double>> psi);
ComplexField apply_A_minus(const LadderPackage& pkg, std::span<const std::complex<double>> psi);
ComplexField apply_A_plus(const LadderPackage& pkg, std::span<const std::complex<double>> psi);
/// Flat-space adjoint (-a_- d/dx a_- + phi_-)/sqrt 2.
ComplexField apply_A_minus_adjoint(const LadderPackage& pkg, std::span<const std::complex<double>> psi);

/// Phi = (phi_- + phi_+)/2 acts by multiplication; Pi psi = -i a_-(a_- psi)'.
struct DeformedObservables {
  GridSpec grid;
  RealField Phi;
  RealField Phi_prime;
  /// hbar Phi'/sqrt(m): [Phi, Pi] = i * commutator_field.
  RealField commutator_field;
};

DeformedObservables deformed_observables(const LadderPackage& pkg);

ComplexField apply_Phi(const DeformedObservables& obs, std::span<const std::complex<double>> psi);
ComplexField apply_Pi(const LadderPackage& pkg, std::span<const std::complex<double>> psi);
/// Phi(Pi psi) - Pi(Phi psi) applied literally, for checking against
/// i * commutator_field * psi.
ComplexField apply_Phi_Pi_commutator(const LadderPackage& pkg, const DeformedObservables& obs,
                                     std::span<const std::complex<double>> psi);

}  // namespace pdemlab
