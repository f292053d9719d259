#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>

#include "pdemlab/error.hpp"
#include "pdemlab/grid.hpp"
#include "pdemlab/profiles.hpp"

namespace testing {

// m = hbar = 1, beta1 = -1, omega^2 = 4 beta2
inline pdemlab::Profile demo_profile(double beta2, double m = 1.0, double hbar = 1.0) {
  return pdemlab::make_profile(pdemlab::constant_mass(m), pdemlab::harmonic_potential(m, 2.0 * std::sqrt(beta2)),
                               {-1.0, beta2, hbar});
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

template <typename F>
double max_abs_error(const pdemlab::GridSpec& grid, std::span<const double> samples, F&& exact, double window) {
  double out = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (std::abs(grid.x(k)) <= window + 1e-12) out = std::max(out, std::abs(samples[k] - exact(grid.x(k))));
  return out;
}

template <typename F>
pdemlab::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const pdemlab::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a pdemlab::Error");
}

}  // namespace testing
