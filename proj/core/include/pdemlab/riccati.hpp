#pragma once

#include <limits>
#include <span>
#include <string_view>

#include "pdemlab/grid.hpp"
#include "pdemlab/ode.hpp"
#include "pdemlab/profiles.hpp"

namespace pdemlab {

/// Riccati equation in the normalised form y' = c(x) (y^2 + p(x) y - q(x)),
/// c > 0. `support` bounds where c, p, q may be evaluated.
struct RiccatiForm {
  ScalarFunction c;
  ScalarFunction p;
  ScalarFunction q;
  double support = std::numeric_limits<double>::infinity();
};

/// How a solution was obtained.
///  - inward: marched from beyond +-L towards x = 0, starting on the
///    quasi-static root; used when its value at 0 matches the requested
///    initial condition. This is the stable direction for the solutions
///    that stay regular on the whole grid.
///  - outward: the initial-value problem marched from x = 0.
enum class RiccatiRoute { inward, outward };

std::string_view to_string(RiccatiRoute route) noexcept;

struct RiccatiSettings {
  OdeSettings ode{};
  double residual_tol = 1e-8;
  /// |y_inward(0) - ic| allowed before falling back to the outward route.
  double match_tol = 1e-9;
  bool allow_inward = true;
  /// Target log-decay of the start-up transient over the domain extension.
  double extension_decay = 40.0;
};

struct RiccatiSolution {
  RealField field_samples;
  RealField derivative_samples;  // right-hand side evaluated on the samples
  double mu = 0.0;
  double ic_value = 0.0;
  double residual_norm = 0.0;
  RiccatiRoute route = RiccatiRoute::outward;
};

/// Solves the Riccati equation on `grid` with y(0) = ic. Throws PoleDetected
/// when |y| exceeds the blow-up cap before reaching +-L and ResidualTooLarge
/// when the finite-difference residual exceeds settings.residual_tol.
/// `mu` is only recorded on the solution.
RiccatiSolution solve_riccati(const RiccatiForm& form, const GridSpec& grid, double ic, double mu,
                              const RiccatiSettings& settings = {});

/// Largest |y'_fd - c(y^2 + p y - q)| / c over interior nodes, with y'_fd from
/// sixth-order central differences. Dividing by c returns the residual of
/// the equation in its unnormalised form for both Riccati equations used here.
double riccati_residual(const RiccatiForm& form, const GridSpec& grid, std::span<const double> samples);

}  // namespace pdemlab
