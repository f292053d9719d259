#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pdemlab/grid.hpp"

namespace pdemlab {

using ScalarFunction = std::function<double(double)>;

/// Coefficients of the PT-symmetric term i(beta1 p x + beta2 x p).
struct PTParameters {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double hbar = 1.0;

  /// beta1 + beta2; every PT-breaking contribution is proportional to it.
  double sigma() const noexcept { return beta1 + beta2; }
};

inline constexpr double kHermitianTolerance = 1e-14;

/// True iff beta1 + beta2 vanishes (within 1e-14); the Hamiltonian is then
/// self-adjoint under the flat L2 product.
bool is_hermitian(const PTParameters& params) noexcept;

/// Even, strictly positive mass m(x) with caller-supplied derivatives.
/// `support` is the half width on which the functions may be evaluated
/// (infinite for closed-form families, the table range for tables).
struct MassProfile {
  ScalarFunction m;
  ScalarFunction m_prime;
  ScalarFunction m_double_prime;
  std::string descriptor;
  double support = std::numeric_limits<double>::infinity();
};

struct PotentialProfile {
  ScalarFunction V;
  ScalarFunction V_prime;
  std::string descriptor;
  double support = std::numeric_limits<double>::infinity();
};

MassProfile constant_mass(double m0);
/// m(x) = m0 / (1 + k x^2), k >= 0.
MassProfile rational_mass(double m0, double k);
/// Natural cubic spline through (x, m) samples; x strictly increasing.
MassProfile table_mass(std::vector<double> xs, std::vector<double> ms);

/// V(x) = m omega^2 x^2 / 2.
PotentialProfile harmonic_potential(double m, double omega);
PotentialProfile zero_potential();
/// V(x) = slope * x. Odd, so rejected by make_profile; kept for negative controls.
PotentialProfile linear_potential(double slope);
PotentialProfile table_potential(std::vector<double> xs, std::vector<double> vs);

/// Validated model inputs. Immutable after construction; all contained
/// callables are pure, so concurrent evaluation is safe.
class Profile {
 public:
  const PTParameters& params() const noexcept { return params_; }
  const MassProfile& mass() const noexcept { return mass_; }
  const PotentialProfile& potential() const noexcept { return potential_; }

  double hbar() const noexcept { return params_.hbar; }
  double sigma() const noexcept { return params_.sigma(); }

  double m(double x) const { return mass_.m(x); }
  double dm(double x) const { return mass_.m_prime(x); }
  double d2m(double x) const { return mass_.m_double_prime(x); }
  double V(double x) const { return potential_.V(x); }
  double dV(double x) const { return potential_.V_prime(x); }

  /// Half width on which every profile function may be evaluated.
  double support() const noexcept;

  /// Builds a profile without any validation. Only for diagnostics such as
  /// the lattice negative controls, which need deliberately broken inputs.
  static Profile unchecked(MassProfile mass, PotentialProfile potential, PTParameters params);

 private:
  Profile(MassProfile mass, PotentialProfile potential, PTParameters params);

  friend Profile make_profile(MassProfile, PotentialProfile, PTParameters, const GridSpec&);

  PTParameters params_;
  MassProfile mass_;
  PotentialProfile potential_;
};

/// Checks hbar > 0, m > 0, evenness of m and V (relative 1e-12) and the
/// supplied derivatives against central differences (relative 1e-6) at every
/// node of `validation_grid`.
Profile make_profile(MassProfile mass, PotentialProfile potential, PTParameters params,
                     const GridSpec& validation_grid = default_grid());

inline bool is_hermitian(const Profile& profile) noexcept { return is_hermitian(profile.params()); }

}  // namespace pdemlab
