#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace pdemlab {

/// Central finite-difference weights on offsets -2..2 (order 2 uses only -1..1).
struct CentralStencil {
  std::array<double, 5> first{};   // multiply by 1/h
  std::array<double, 5> second{};  // multiply by 1/h^2
};

/// Throws InvalidArgument for orders other than 2 and 4.
const CentralStencil& central_stencil(int order);

/// Derivatives of uniformly sampled data. Interior nodes use the central
/// stencil of the requested order; the nodes closest to each end use
/// one-sided formulas of the same order. First derivatives also accept
/// order 6 (central only, order-4 values on the outer three nodes).
std::vector<double> differentiate(std::span<const double> f, double h, int order = 4);
std::vector<std::complex<double>> differentiate(std::span<const std::complex<double>> f, double h, int order = 4);
std::vector<double> differentiate2(std::span<const double> f, double h, int order = 4);
std::vector<std::complex<double>> differentiate2(std::span<const std::complex<double>> f, double h,
                                                 int order = 4);

}  // namespace pdemlab
