#include "pdemlab/lattice.hpp"

#include <algorithm>
#include <cmath>

#include <lapacke.h>

#include "pdemlab/error.hpp"
#include "pdemlab/oracles.hpp"
#include "pdemlab/stencil.hpp"
#include "pdemlab/susy.hpp"

namespace pdemlab {

namespace {

void require_lattice_size(const GridSpec& grid) {
  if (grid.size() > kMaxLatticePoints)
    throw Error(ErrorCode::InvalidArgument, "dense lattice operators are limited to " +
                                                std::to_string(kMaxLatticePoints) + " points");
}

void require_same_grid(const LatticeOperator& a, const LatticeOperator& b) {
  if (!(a.grid == b.grid)) throw Error(ErrorCode::GridMismatch, "lattice operators live on different grids");
}

double adjoint_log_mass_slope(const Profile& profile, double x) { return profile.dm(x) / profile.m(x); }

double log_mass_curvature(const Profile& profile, double x) {
  const double m = profile.m(x);
  const double dm = profile.dm(x);
  return profile.d2m(x) / m - dm * dm / (m * m);
}

}  // namespace

LatticeOperator discretize_second_order(const GridSpec& grid, int stencil_order, std::span<const double> a,
                                        std::span<const double> b, std::span<const double> c) {
  require_lattice_size(grid);
  require_on_grid(a.size(), grid, "second-order coefficient");
  require_on_grid(b.size(), grid, "first-order coefficient");
  require_on_grid(c.size(), grid, "zeroth-order coefficient");
  const CentralStencil& st = central_stencil(stencil_order);
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  LatticeOperator op{grid, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
                     Boundary::dirichlet, stencil_order};
  for (std::size_t k = 0; k < n; ++k) {
    for (int off = -2; off <= 2; ++off) {
      const long j = static_cast<long>(k) + off;
      if (j < 0 || j >= static_cast<long>(n)) continue;
      const double w = a[k] * st.second[off + 2] / (h * h) + b[k] * st.first[off + 2] / h;
      if (w != 0.0) op.entries(static_cast<Eigen::Index>(k), j) += w;
    }
    op.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) += c[k];
  }
  return op;
}

LatticeOperator discretize_H(const Profile& profile, const GridSpec& grid, int stencil_order) {
  const double hb2 = profile.hbar() * profile.hbar();
  RealField a(grid.size()), b(grid.size()), c(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double kinetic = -hb2 / (2.0 * profile.m(x));
    a[k] = kinetic;
    b[k] = -kinetic * u_at(profile, x);
    c[k] = Ve_at(profile, x);
  }
  return discretize_second_order(grid, stencil_order, a, b, c);
}

LatticeOperator discretize_H_adjoint(const Profile& profile, const GridSpec& grid, int stencil_order) {
  const double hbar = profile.hbar();
  const double beta2 = profile.params().beta2;
  RealField a(grid.size()), b(grid.size()), c(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double m = profile.m(x);
    const double kinetic = -hbar * hbar / (2.0 * m);
    const double u_dag = adjoint_log_mass_slope(profile, x) - 2.0 / hbar * profile.sigma() * x * m;
    a[k] = kinetic;
    b[k] = -kinetic * u_dag;
    c[k] = profile.V(x) - hbar * beta2 + kinetic * log_mass_curvature(profile, x);
  }
  return discretize_second_order(grid, stencil_order, a, b, c);
}

ComplexField matvec(const LatticeOperator& op, std::span<const std::complex<double>> psi) {
  require_on_grid(psi.size(), op.grid, "state");
  const Eigen::Map<const Eigen::VectorXcd> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
  const Eigen::VectorXcd r = op.entries * v;
  return ComplexField(r.data(), r.data() + r.size());
}

ComplexField apply_hamiltonian(const Profile& profile, const GridSpec& grid, std::span<const std::complex<double>> psi,
                               int stencil_order) {
  require_on_grid(psi.size(), grid, "state");
  const double h = grid.spacing();
  const ComplexField d1 = differentiate(psi, h, stencil_order);
  const ComplexField d2 = differentiate2(psi, h, stencil_order);
  const double hb2 = profile.hbar() * profile.hbar();
  ComplexField out(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double x = grid.x(k);
    out[k] = -hb2 / (2.0 * profile.m(x)) * (d2[k] - u_at(profile, x) * d1[k]) + Ve_at(profile, x) * psi[k];
  }
  return out;
}

double interior_max_abs(std::span<const std::complex<double>> a, std::size_t layers) {
  double worst = 0.0;
  for (std::size_t k = layers; k + layers < a.size(); ++k) worst = std::max(worst, std::abs(a[k]));
  return worst;
}

double interior_relative_error(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                               std::size_t layers) {
  if (a.size() != b.size()) throw Error(ErrorCode::GridMismatch, "compared fields differ in length");
  double diff = 0.0;
  for (std::size_t k = layers; k + layers < a.size(); ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
  const double scale = interior_max_abs(b, layers);
  return scale > 0.0 ? diff / scale : diff;
}

double pseudo_hermiticity_residual(const LatticeOperator& H, const LatticeOperator& Hdag, const MetricWeight& metric,
                                   std::size_t layers, std::span<const ComplexField> test_functions) {
  require_same_grid(H, Hdag);
  if (!(metric.grid == H.grid)) throw Error(ErrorCode::GridMismatch, "metric and operator grids differ");
  const std::size_t n = H.grid.size();
  double worst = 0.0;
  for (const auto& g : test_functions) {
    require_on_grid(g.size(), H.grid, "test function");
    ComplexField pulled(n);
    for (std::size_t k = 0; k < n; ++k) pulled[k] = std::exp(-metric.lambda[k]) * g[k];
    ComplexField lhs = matvec(H, pulled);
    for (std::size_t k = 0; k < n; ++k) lhs[k] *= metric.eta[k];
    worst = std::max(worst, interior_relative_error(lhs, matvec(Hdag, g), layers));
  }
  return worst;
}

double pseudo_hermiticity_residual(const LatticeOperator& H, const LatticeOperator& Hdag, const MetricWeight& metric,
                                   std::size_t layers) {
  const auto basket = hermite_gaussian_basket(H.grid, 8, metric_envelope(metric));
  return pseudo_hermiticity_residual(H, Hdag, metric, layers, basket);
}

double pt_commutator_residual(const LatticeOperator& H, std::size_t layers) {
  const auto n = static_cast<Eigen::Index>(H.grid.size());
  const auto l = static_cast<Eigen::Index>(layers);
  double worst = 0.0;
  for (Eigen::Index j = l; j < n - l; ++j)
    for (Eigen::Index k = l; k < n - l; ++k)
      worst = std::max(worst, std::abs(H.entries(j, k) - std::conj(H.entries(n - 1 - j, n - 1 - k))));
  return worst;
}

double adjoint_consistency_residual(const LatticeOperator& H, const LatticeOperator& Hdag, std::size_t layers,
                                    std::span<const ComplexField> test_functions) {
  require_same_grid(H, Hdag);
  double worst = 0.0;
  for (const auto& g : test_functions) {
    require_on_grid(g.size(), H.grid, "test function");
    const Eigen::Map<const Eigen::VectorXcd> v(g.data(), static_cast<Eigen::Index>(g.size()));
    const Eigen::VectorXcd r = H.entries.adjoint() * v;
    const ComplexField transposed(r.data(), r.data() + r.size());
    worst = std::max(worst, interior_relative_error(transposed, matvec(Hdag, g), layers));
  }
  return worst;
}

double hermiticity_defect(const LatticeOperator& H, std::size_t layers) {
  const auto n = static_cast<Eigen::Index>(H.grid.size());
  const auto l = static_cast<Eigen::Index>(layers);
  double worst = 0.0;
  for (Eigen::Index j = l; j < n - l; ++j)
    for (Eigen::Index k = l; k < n - l; ++k)
      worst = std::max(worst, std::abs(H.entries(j, k) - std::conj(H.entries(k, j))));
  return worst;
}

double factorization_residual(const LadderPackage& pkg, const Profile& profile,
                              std::span<const ComplexField> test_functions, std::size_t layers) {
  double worst = 0.0;
  for (const auto& psi : test_functions) {
    const ComplexField lhs = apply_A_plus(pkg, apply_A_minus(pkg, psi));
    const ComplexField rhs = apply_hamiltonian(profile, pkg.grid, psi);
    worst = std::max(worst, interior_relative_error(lhs, rhs, layers));
  }
  return worst;
}

std::vector<std::complex<double>> eigenvalues(const LatticeOperator& H) {
  const auto n = static_cast<lapack_int>(H.grid.size());
  std::vector<std::complex<double>> values(static_cast<std::size_t>(n));
  const bool real = (H.entries.imag().array() == 0.0).all();
  const bool symmetric = real && (H.entries.real().array() == H.entries.real().transpose().array()).all();
  lapack_int info = 0;
  if (symmetric) {
    Eigen::MatrixXd a = H.entries.real();
    std::vector<double> w(values.size());
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, w.data());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = {w[k], 0.0};
  } else if (real) {
    Eigen::MatrixXd a = H.entries.real();
    std::vector<double> wr(values.size()), wi(values.size());
    info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, wr.data(), wi.data(), nullptr, 1, nullptr, 1);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = {wr[k], wi[k]};
  } else {
    Eigen::MatrixXcd a = H.entries;
    info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(a.data()), n,
                         reinterpret_cast<lapack_complex_double*>(values.data()), nullptr, 1, nullptr, 1);
  }
  if (info != 0) throw Error(ErrorCode::EigensolveFailure, "eigensolver returned info = " + std::to_string(info));
  std::sort(values.begin(), values.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return values;
}

SpectrumSummary summarize_spectrum(std::span<const std::complex<double>> sorted_eigenvalues, std::size_t count) {
  std::vector<std::complex<double>> by_modulus(sorted_eigenvalues.begin(), sorted_eigenvalues.end());
  count = std::min(count, by_modulus.size());
  std::stable_sort(by_modulus.begin(), by_modulus.end(),
                   [](auto a, auto b) { return std::abs(a) < std::abs(b); });
  by_modulus.resize(count);
  std::sort(by_modulus.begin(), by_modulus.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  SpectrumSummary s{by_modulus, 0.0};
  for (const auto& v : s.lowest) s.max_imag = std::max(s.max_imag, std::abs(v.imag()));
  return s;
}

SpectrumSummary spectrum_reality(const LatticeOperator& H, std::size_t count) {
  const auto values = eigenvalues(H);
  return summarize_spectrum(values, count);
}

ResidualReport residual_report(const Profile& profile, const GridSpec& grid, const ResidualSettings& settings) {
  ResidualReport r;
  r.boundary_layers_excluded = settings.layers;
  r.stencil_order = settings.stencil_order;
  const LatticeOperator H = discretize_H(profile, grid, settings.stencil_order);
  const LatticeOperator Hdag = discretize_H_adjoint(profile, grid, settings.stencil_order);
  const MetricWeight metric = build_metric(profile, grid);
  r.pseudo_hermiticity_residual = pseudo_hermiticity_residual(H, Hdag, metric, settings.layers);
  r.pt_commutator_residual = pt_commutator_residual(H, settings.layers);
  const auto basket = test_function_basket(grid, 16);
  r.adjoint_consistency_residual = adjoint_consistency_residual(H, Hdag, settings.layers, basket);
  if (settings.compute_factorization) {
    const LadderPackage pkg = build_ladder(profile, grid);
    r.factorization_residual = factorization_residual(pkg, profile, basket, settings.layers);
  }
  if (settings.compute_spectrum) {
    const SpectrumSummary s = spectrum_reality(H, settings.eigenvalue_count);
    r.max_imag_eigenvalue = s.max_imag;
    r.lowest_eigenvalues = s.lowest;
  }
  return r;
}

}  // namespace pdemlab
