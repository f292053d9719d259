#pragma once

#include "pdemlab/grid.hpp"
#include "pdemlab/profiles.hpp"
#include "pdemlab/riccati.hpp"

namespace pdemlab {

/// u = m'/m + (2/hbar)(beta1+beta2) x m, the first-derivative coefficient of H.
double u_at(const Profile& profile, double x);
/// V_e = hbar beta1 + V - (hbar^2 / 2m) (m'/m)'.
double Ve_at(const Profile& profile, double x);
/// v_e = 2 m V_e / hbar^2.
double ve_at(const Profile& profile, double x);

struct EffectiveFields {
  GridSpec grid;
  RealField u;
  RealField V_e;
  RealField v_e;
};

EffectiveFields effective_fields(const Profile& profile, const GridSpec& grid);

/// K' = u K + K^2 - v_e - mu m written as a RiccatiForm (c = 1).
RiccatiForm k_riccati_form(const Profile& profile, double mu);

/// Solves K' - u K - K^2 + v_e + mu m = 0 with K(0) = ic_value.
RiccatiSolution solve_K_riccati(const EffectiveFields& fields, const Profile& profile, double mu, double ic_value,
                                const GridSpec& grid, const RiccatiSettings& settings = {});

/// Intertwiner scale a = a0 m^(-1/4), superpotential phi = K a^2 - (a^2)'/2 and
/// the partner potential.
struct SusyPackage {
  GridSpec grid;
  double a0 = 1.0;
  RealField a;
  RealField a_squared;
  RealField phi;
  RealField phi_prime;
  RealField partner_potential;
};

SusyPackage susy_package(const EffectiveFields& fields, const RiccatiSolution& K, double a0, const Profile& profile);

/// Residuals of the intertwining consistency conditions, each the largest
/// absolute violation over interior nodes with derivatives taken by
/// fourth-order differences of the samples:
///  - scale_equation:     2 (1/m)(a^2)' = (1/m)' a^2
///  - superpotential:     phi = K a^2 - (a^2)'/2
///  - partner_equation:   (2 m a^2/hbar^2)(V~ - V_e) = (u a^2)' + 2 phi_a' + (a^2)''
///  - phi_a_equation:     (hbar^2/2m)(u phi_a' - phi_a'') + (V~ - V_e) phi_a = a^2 V_e'
/// with phi_a = K a^2. The last one is the unreduced second-order form of the
/// K Riccati equation.
struct SusyConsistency {
  double scale_equation = 0.0;
  double superpotential = 0.0;
  double partner_equation = 0.0;
  double phi_a_equation = 0.0;
};

SusyConsistency susy_consistency(const Profile& profile, const EffectiveFields& fields, const RiccatiSolution& K,
                                 const SusyPackage& package);

}  // namespace pdemlab
