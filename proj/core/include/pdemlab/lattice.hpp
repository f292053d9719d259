#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pdemlab/grid.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/profiles.hpp"

namespace pdemlab {

enum class Boundary { dirichlet };

/// Dense finite-difference matrix of a second-order operator on a grid.
/// Dirichlet: stencil points outside the grid are dropped (zero extension),
/// so the first and last rows are only first-order consistent and are
/// excluded from residual norms.
struct LatticeOperator {
  GridSpec grid;
  Eigen::MatrixXcd entries;
  Boundary boundary = Boundary::dirichlet;
  int stencil_order = 4;
};

inline constexpr std::size_t kDefaultBoundaryLayers = 8;
inline constexpr std::size_t kMaxLatticePoints = 4001;

/// a f'' + b f' + c f with central stencils of `stencil_order`.
LatticeOperator discretize_second_order(const GridSpec& grid, int stencil_order, std::span<const double> a,
                                        std::span<const double> b, std::span<const double> c);

/// H = -(hbar^2/2m)(d^2/dx^2 - u d/dx) + V_e.
LatticeOperator discretize_H(const Profile& profile, const GridSpec& grid, int stencil_order = 4);
/// H^dagger from its own coefficients,
///   u^dagger = m'/m - (2/hbar)(beta1+beta2) x m,
///   V_e^dagger = V - hbar beta2 - (hbar^2/2m)(m'/m)',
/// independently of transposing H.
LatticeOperator discretize_H_adjoint(const Profile& profile, const GridSpec& grid, int stencil_order = 4);

ComplexField matvec(const LatticeOperator& op, std::span<const std::complex<double>> psi);

/// Matrix-free H psi with differentiate/differentiate2 (one-sided ends).
ComplexField apply_hamiltonian(const Profile& profile, const GridSpec& grid, std::span<const std::complex<double>> psi,
                               int stencil_order = 4);

/// max over interior nodes |a - b| / max over interior nodes |b|.
double interior_relative_error(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                               std::size_t layers);
double interior_max_abs(std::span<const std::complex<double>> a, std::size_t layers);

/// Pseudo-Hermiticity eta H eta^-1 = H^dagger measured on test functions:
/// the largest interior_relative_error of eta H (eta^-1 g) against H^dagger g.
/// An entrywise comparison of the matrices does not converge with h (the
/// similarity transform moves an O(1) diagonal shift onto the off-diagonals).
double pseudo_hermiticity_residual(const LatticeOperator& H, const LatticeOperator& Hdag, const MetricWeight& metric,
                                   std::size_t layers, std::span<const ComplexField> test_functions);
/// Same, with the Hermite-Gaussian basket sized to the metric.
double pseudo_hermiticity_residual(const LatticeOperator& H, const LatticeOperator& Hdag, const MetricWeight& metric,
                                   std::size_t layers = kDefaultBoundaryLayers);

/// max |H - P conj(H) P| over interior rows and columns, P the index reversal.
double pt_commutator_residual(const LatticeOperator& H, std::size_t layers = kDefaultBoundaryLayers);

/// Largest interior_relative_error between the conjugate transpose of H and
/// the separately discretised H^dagger, applied to test functions.
double adjoint_consistency_residual(const LatticeOperator& H, const LatticeOperator& Hdag, std::size_t layers,
                                    std::span<const ComplexField> test_functions);

/// max |H - H^dagger_matrix| over the interior block.
double hermiticity_defect(const LatticeOperator& H, std::size_t layers = kDefaultBoundaryLayers);

/// Largest interior_relative_error of A_+ A_- psi against H psi.
double factorization_residual(const LadderPackage& pkg, const Profile& profile,
                              std::span<const ComplexField> test_functions, std::size_t layers = kDefaultBoundaryLayers);

/// All eigenvalues, sorted by real part. Exactly symmetric real matrices go
/// through dsyevd, other real ones through dgeev, complex ones through zgeev.
/// Throws EigensolveFailure.
std::vector<std::complex<double>> eigenvalues(const LatticeOperator& H);

struct SpectrumSummary {
  std::vector<std::complex<double>> lowest;  // `count` smallest |lambda|, sorted by real part
  double max_imag = 0.0;
};

SpectrumSummary spectrum_reality(const LatticeOperator& H, std::size_t count);
SpectrumSummary summarize_spectrum(std::span<const std::complex<double>> sorted_eigenvalues, std::size_t count);

struct ResidualReport {
  double pseudo_hermiticity_residual = 0.0;
  double pt_commutator_residual = 0.0;
  double adjoint_consistency_residual = 0.0;
  double factorization_residual = 0.0;
  double max_imag_eigenvalue = 0.0;
  std::vector<std::complex<double>> lowest_eigenvalues;
  std::size_t boundary_layers_excluded = kDefaultBoundaryLayers;
  int stencil_order = 4;
};

struct ResidualSettings {
  int stencil_order = 4;
  std::size_t layers = kDefaultBoundaryLayers;
  std::size_t eigenvalue_count = 10;
  bool compute_spectrum = true;
  bool compute_factorization = true;
};

/// Every lattice check for one profile.
ResidualReport residual_report(const Profile& profile, const GridSpec& grid, const ResidualSettings& settings = {});

}  // namespace pdemlab
