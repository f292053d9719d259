#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/lattice.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/oracles.hpp"
#include "pdemlab/states.hpp"

using namespace pdemlab;
using testing::error_code_of;

namespace {

Profile constant_mass_pair(double beta1, double beta2) {
  return make_profile(constant_mass(1.0), harmonic_potential(1.0, 1.0), {beta1, beta2, 1.0});
}

double pseudo_residual(const Profile& p, std::size_t n, int order = 4) {
  const GridSpec g(8.0, n);
  return pseudo_hermiticity_residual(discretize_H(p, g, order), discretize_H_adjoint(p, g, order),
                                     build_metric(p, g));
}

}  // namespace

TEST_CASE("hermitian lattice operators are symmetric") {
  const GridSpec g(8.0, 801);
  for (const Profile& p : {testing::demo_profile(1.0), constant_mass_pair(-0.5, 0.5)}) {
    const LatticeOperator H = discretize_H(p, g);
    CHECK(hermiticity_defect(H) < 1e-12);
    CHECK(H.entries.rows() == static_cast<Eigen::Index>(g.size()));
    CHECK(H.stencil_order == 4);
    CHECK(H.boundary == Boundary::dirichlet);
  }
  const Profile rational = make_profile(rational_mass(1.0, 1.0), zero_potential(), {-1.0, 1.0, 1.0});
  // symmetric up to the first-derivative discretization error
  CHECK(hermiticity_defect(discretize_H(rational, g)) > 0.0);
  CHECK(hermiticity_defect(discretize_H(testing::demo_profile(0.0), g)) > 1.0);
}

TEST_CASE("matrix and matrix-free Hamiltonians agree") {
  const GridSpec g(8.0, 801);
  const Profile p = make_profile(rational_mass(1.0, 0.5), harmonic_potential(1.0, 1.0), {-1.0, 0.3, 1.0});
  const LatticeOperator H = discretize_H(p, g);
  for (const ComplexField& f : test_function_basket(g, 4)) {
    CHECK(interior_relative_error(matvec(H, f), apply_hamiltonian(p, g, f), 2) < 1e-12);
  }
}

TEST_CASE("ground state lies in the kernel of the lattice Hamiltonian") {
  const GridSpec g = default_grid();
  for (double beta2 : {0.0, 1.0, 2.0}) {
    const Profile p = testing::demo_profile(beta2);
    const LadderPackage pkg = build_ladder(p, g);
    const CoherentState s = coherent_state(pkg, 0.0, build_metric(p, g), Convention::eta);
    CHECK(interior_max_abs(matvec(discretize_H(p, g), s.samples), kDefaultBoundaryLayers) < 1e-5);
  }
}

TEST_CASE("lowest eigenvalue at the hermitian point is zero") {
  const Profile p = testing::demo_profile(1.0);
  double previous = 0.0;
  for (std::size_t n : {1001, 2001}) {
    const SpectrumSummary s = spectrum_reality(discretize_H(p, GridSpec(8.0, n)), 10);
    CHECK(s.max_imag == 0.0);
    CHECK(std::abs(s.lowest.front()) < 1e-4);
    // harmonic ladder with spacing hbar omega = 2
    CHECK(s.lowest[1].real() == doctest::Approx(2.0).epsilon(1e-4));
    if (n == 2001) CHECK(std::abs(s.lowest.front()) < std::abs(previous));
    previous = s.lowest.front().real();
  }
}

TEST_CASE("pseudo-hermiticity residuals") {
  CHECK(pseudo_residual(testing::demo_profile(1.0), 2001) < 1e-12);
  CHECK(pseudo_residual(constant_mass_pair(-1.0, 1.0), 2001) < 1e-12);
  CHECK(pseudo_residual(testing::demo_profile(0.0), 2001) < 1e-6);
  CHECK(pseudo_residual(constant_mass_pair(-1.0, 0.0), 2001) < 1e-6);
  CHECK(pseudo_residual(constant_mass_pair(1.0, 2.0), 2001) < 1e-6);
  const Profile r = make_profile(rational_mass(1.0, 1.0), zero_potential(), {1.0, 0.0, 1.0});
  CHECK(pseudo_residual(r, 2001) < 1e-6);
}

TEST_CASE("corrupted metric breaks pseudo-hermiticity") {
  const GridSpec g = default_grid();
  const Profile p = testing::demo_profile(0.0);
  const MetricWeight w = build_metric(p, g);
  RealField scaled = w.lambda;
  for (double& v : scaled) v *= 1.1;
  const double r = pseudo_hermiticity_residual(discretize_H(p, g), discretize_H_adjoint(p, g),
                                               metric_from_lambda(g, scaled));
  CHECK(r > 1e-2);
}

TEST_CASE("pseudo-hermiticity residual decays at the stencil order") {
  for (const Profile& p : {constant_mass_pair(-1.0, 0.0), constant_mass_pair(1.0, 2.0)}) {
    const double r1 = pseudo_residual(p, 501);
    const double r2 = pseudo_residual(p, 1001);
    const double r3 = pseudo_residual(p, 2001);
    CHECK(r1 / r2 == doctest::Approx(16.0).epsilon(0.3));
    CHECK(r2 / r3 == doctest::Approx(16.0).epsilon(0.3));
    const double s1 = pseudo_residual(p, 501, 2);
    const double s2 = pseudo_residual(p, 1001, 2);
    CHECK(s1 / s2 == doctest::Approx(4.0).epsilon(0.3));
  }
}

TEST_CASE("PT commutator residual") {
  const GridSpec g(8.0, 801);
  CHECK(pt_commutator_residual(discretize_H(testing::demo_profile(0.0), g)) < 1e-10);
  CHECK(pt_commutator_residual(discretize_H(testing::demo_profile(1.0), g)) < 1e-12);
  const Profile r = make_profile(rational_mass(1.0, 1.0), harmonic_potential(1.0, 1.0), {1.0, 0.5, 1.0});
  CHECK(pt_commutator_residual(discretize_H(r, g)) < 1e-10);
  const Profile odd = Profile::unchecked(constant_mass(1.0), linear_potential(1.0), {-1.0, 0.0, 1.0});
  CHECK(pt_commutator_residual(discretize_H(odd, g)) > 1.0);
}

TEST_CASE("transposed H matches the adjoint built directly") {
  const std::vector<Profile> profiles{
      constant_mass_pair(-1.0, 0.0),
      constant_mass_pair(1.0, 2.0),
      make_profile(rational_mass(1.0, 1.0), zero_potential(), {1.0, 0.0, 1.0}),
  };
  for (const Profile& p : profiles) {
    const GridSpec g(8.0, kMaxLatticePoints);
    const double fine =
        adjoint_consistency_residual(discretize_H(p, g), discretize_H_adjoint(p, g), 8, test_function_basket(g, 16));
    CHECK(fine < 1e-8);
  }
  const Profile p = constant_mass_pair(-1.0, 0.0);
  auto at = [&](std::size_t n) {
    const GridSpec g(8.0, n);
    return adjoint_consistency_residual(discretize_H(p, g), discretize_H_adjoint(p, g), 8,
                                        test_function_basket(g, 16));
  };
  CHECK(at(1001) / at(2001) == doctest::Approx(16.0).epsilon(0.3));
  const GridSpec g(8.0, 801);
  CHECK(adjoint_consistency_residual(discretize_H(testing::demo_profile(1.0), g),
                                     discretize_H_adjoint(testing::demo_profile(1.0), g), 8,
                                     test_function_basket(g, 4)) < 1e-12);
}

TEST_CASE("spectrum of the free PT point converges and stays real") {
  const Profile p = testing::demo_profile(0.0);
  const SpectrumSummary coarse = spectrum_reality(discretize_H(p, GridSpec(8.0, 1001)), 10);
  const SpectrumSummary fine = spectrum_reality(discretize_H(p, GridSpec(8.0, 2001)), 10);
  REQUIRE(coarse.lowest.size() == 10);
  REQUIRE(fine.lowest.size() == 10);
  CHECK(fine.max_imag <= coarse.max_imag + 1e-10);
  CHECK(fine.max_imag < 1e-6);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::abs(fine.lowest[k] - coarse.lowest[k]) < 1e-3 * (1.0 + std::abs(fine.lowest[k])));
    CHECK(fine.lowest[k].real() == doctest::Approx(static_cast<double>(k)).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("non-PT perturbation produces complex eigenvalues") {
  const GridSpec g(8.0, 401);
  LatticeOperator H = discretize_H(testing::demo_profile(0.5), g);
  CHECK(spectrum_reality(H, 10).max_imag < 1e-8);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  for (Eigen::Index k = 0; k < H.entries.rows(); ++k) H.entries(k, k) += std::complex<double>(0.0, 0.5 * n(rng));
  CHECK(spectrum_reality(H, 10).max_imag > 1e-3);
}

TEST_CASE("eigenvalues come back sorted") {
  const GridSpec g(8.0, 201);
  const auto values = eigenvalues(discretize_H(testing::demo_profile(0.5), g));
  REQUIRE(values.size() == g.size());
  for (std::size_t k = 1; k < values.size(); ++k) CHECK(values[k - 1].real() <= values[k].real());
  const std::vector<std::complex<double>> made{{-3.0, 0.0}, {0.5, 1.0}, {0.5, -1.0}, {2.0, 0.0}};
  const SpectrumSummary s = summarize_spectrum(made, 3);
  REQUIRE(s.lowest.size() == 3);
  CHECK(s.lowest[0] == std::complex<double>(0.5, -1.0));
  CHECK(s.lowest[2] == std::complex<double>(2.0, 0.0));
  CHECK(s.max_imag == 1.0);
}

TEST_CASE("lattice argument checks") {
  const Profile p = testing::demo_profile(0.5);
  CHECK(error_code_of([&] { discretize_H(p, GridSpec(8.0, kMaxLatticePoints + 2)); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([&] { discretize_H(p, GridSpec(8.0, 101), 3); }) == ErrorCode::InvalidArgument);
  const GridSpec a(8.0, 101), b(8.0, 103);
  CHECK(error_code_of([&] {
          pseudo_hermiticity_residual(discretize_H(p, a), discretize_H_adjoint(p, a), build_metric(p, b));
        }) == ErrorCode::GridMismatch);
  CHECK(error_code_of([&] { pseudo_hermiticity_residual(discretize_H(p, a), discretize_H_adjoint(p, b),
                                                        build_metric(p, a)); }) == ErrorCode::GridMismatch);
  CHECK(error_code_of([&] { matvec(discretize_H(p, a), ComplexField(5)); }) == ErrorCode::GridMismatch);
}

TEST_CASE("residual report is complete and deterministic") {
  const Profile p = testing::demo_profile(0.5);
  const GridSpec g(8.0, 1001);
  ResidualSettings s;
  s.eigenvalue_count = 6;
  const ResidualReport a = residual_report(p, g, s);
  const ResidualReport b = residual_report(p, g, s);
  CHECK(a.pseudo_hermiticity_residual == b.pseudo_hermiticity_residual);
  CHECK(a.adjoint_consistency_residual == b.adjoint_consistency_residual);
  CHECK(a.factorization_residual == b.factorization_residual);
  CHECK(a.lowest_eigenvalues == b.lowest_eigenvalues);
  CHECK(a.lowest_eigenvalues.size() == 6);
  CHECK(a.boundary_layers_excluded == kDefaultBoundaryLayers);
  CHECK(a.pseudo_hermiticity_residual < 1e-5);
  CHECK(a.pt_commutator_residual < 1e-10);
  CHECK(a.factorization_residual < 1e-5);
  CHECK(a.max_imag_eigenvalue < 1e-6);
  for (double v : {a.pseudo_hermiticity_residual, a.pt_commutator_residual, a.adjoint_consistency_residual,
                   a.factorization_residual, a.max_imag_eigenvalue})
    CHECK(v >= 0.0);
}
