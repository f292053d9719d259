#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pdemlab/grid.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/metric.hpp"

namespace pdemlab {

/// <x^k> for the normalised density proportional to exp(-c x^2):
/// 0 for odd k, (k-1)!! / (2c)^(k/2) for even k. Throws DomainError for c <= 0.
double gaussian_moment(double c, int k);

/// He_n(sqrt(2c) x) exp(-c x^2) scaled to unit maximum modulus.
ComplexField hermite_gaussian(const GridSpec& grid, int n, double c);
std::vector<ComplexField> hermite_gaussian_basket(const GridSpec& grid, int count, double c);

/// 1 + max(0, sup_x -Lambda(x)/x^2): an exp(-c x^2) envelope with this c
/// keeps both g and eta^-1 g decaying.
double metric_envelope(const MetricWeight& metric);

inline constexpr std::uint64_t kTestFunctionSeed = 20240607;

/// Deterministic random smooth functions: cubic polynomials with complex
/// coefficients in the unit square times exp(-w (x - s)^2), w in [0.5, 2],
/// s in [-1, 1].
std::vector<ComplexField> test_function_basket(const GridSpec& grid, int count,
                                               std::uint64_t seed = kTestFunctionSeed);

/// Ladder operator identities, each as lhs - rhs applied to a function:
///  eq48: A_+ = u0/sqrt2 + A_-^dagger
///  eq49: [u0, A_-^dagger] = (hbar/sqrt(2m)) u0'
///  eq50: [A_-, A_-^dagger] = (hbar/sqrt m) phi_-'
///  eq51: A_+^2 = (A_-^dagger)^2 + sqrt2 A_-^dagger u0 + (u0^2 + (hbar/sqrt m) u0')/2
///  eq52: A_- A_+ + A_+ A_- = 2 A_-^dagger A_- + sqrt2 u0 A_- + (hbar/sqrt m) Phi'
enum class IdentityTag { eq48, eq49, eq50, eq51, eq52 };

std::string_view to_string(IdentityTag tag) noexcept;
IdentityTag parse_identity_tag(std::string_view text);

/// Largest interior |lhs - rhs| over the test functions, both sides applied
/// with the package's stencil order.
double operator_identity_bruteforce(const LadderPackage& pkg, IdentityTag tag,
                                    std::span<const ComplexField> test_functions, std::size_t layers = 8);

}  // namespace pdemlab
