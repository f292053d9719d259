#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace pdemlab;
using testing::error_code_of;

TEST_CASE("harmonic demo profile is accepted") {
  const Profile p = make_profile(constant_mass(1.0), harmonic_potential(1.0, 2.0), {-1.0, 1.0, 1.0});
  CHECK(p.V(1.5) == doctest::Approx(0.5 * 4 * 2.25));
  CHECK(p.dV(1.5) == doctest::Approx(4 * 1.5));
  CHECK(p.sigma() == 0.0);
  CHECK(is_hermitian(p));
}

TEST_CASE("odd potential is rejected") {
  CHECK(error_code_of([] { make_profile(constant_mass(1.0), linear_potential(1.0), {-1.0, 0.0, 1.0}); }) ==
        ErrorCode::ParityViolation);
}

TEST_CASE("rational mass profile is accepted") {
  const Profile p = make_profile(rational_mass(1.0, 1.0), zero_potential(), {1.0, 0.0, 1.0});
  CHECK(p.m(1.0) == doctest::Approx(0.5));
  CHECK(p.dm(1.0) == doctest::Approx(-0.5));
  CHECK(p.d2m(1.0) == doctest::Approx(0.5));
  CHECK_FALSE(is_hermitian(p));
}

TEST_CASE("invalid inputs") {
  MassProfile negative{[](double x) { return x * x - 1.0; }, [](double x) { return 2 * x; },
                       [](double) { return 2.0; }, "bad"};
  CHECK(error_code_of([&] { make_profile(negative, zero_potential(), {}); }) == ErrorCode::NonPositiveMass);

  MassProfile lopsided{[](double x) { return 2.0 + 0.1 * std::tanh(x); },
                       [](double x) { return 0.1 / (std::cosh(x) * std::cosh(x)); },
                       [](double x) { return -0.2 * std::tanh(x) / (std::cosh(x) * std::cosh(x)); }, "odd part"};
  CHECK(error_code_of([&] { make_profile(lopsided, zero_potential(), {}); }) == ErrorCode::ParityViolation);

  MassProfile wrong_derivative = rational_mass(1.0, 1.0);
  wrong_derivative.m_prime = [](double x) { return -x; };
  CHECK(error_code_of([&] { make_profile(wrong_derivative, zero_potential(), {}); }) ==
        ErrorCode::DerivativeMismatch);

  PotentialProfile wrong_force = harmonic_potential(1.0, 1.0);
  wrong_force.V_prime = [](double x) { return 2 * x; };
  CHECK(error_code_of([&] { make_profile(constant_mass(1.0), wrong_force, {}); }) ==
        ErrorCode::DerivativeMismatch);

  CHECK(error_code_of([] { make_profile(constant_mass(1.0), zero_potential(), {0.0, 0.0, 0.0}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { make_profile(constant_mass(1.0), zero_potential(), {NAN, 0.0, 1.0}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { rational_mass(1.0, -1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("hermiticity flag") {
  CHECK(is_hermitian(PTParameters{-1.0, 1.0, 1.0}));
  CHECK_FALSE(is_hermitian(PTParameters{-1.0, 0.0, 1.0}));
  CHECK(is_hermitian(PTParameters{0.0, 0.0, 1.0}));
  CHECK(is_hermitian(PTParameters{0.3, -0.3, 1.0}));
  CHECK_FALSE(is_hermitian(PTParameters{1e-13, 0.0, 1.0}));
}

TEST_CASE("hermiticity flag is symmetric under swapping the betas") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double b1 = u(rng);
    const double b2 = i % 3 == 0 ? -b1 : u(rng);
    CHECK(is_hermitian(PTParameters{b1, b2, 1.0}) == is_hermitian(PTParameters{b2, b1, 1.0}));
  }
}

TEST_CASE("constructed profiles are even at random points") {
  const double L = kDefaultHalfWidth;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, L);
  const std::vector<Profile> profiles{
      testing::demo_profile(0.5),
      make_profile(rational_mass(1.0, 1.0), zero_potential(), {1.0, 0.0, 1.0}),
      make_profile(rational_mass(2.0, 0.3), harmonic_potential(1.0, 1.0), {-1.0, 1.0, 1.0}),
  };
  for (const Profile& p : profiles) {
    for (int i = 0; i < 64; ++i) {
      const double x = u(rng);
      CHECK(p.m(-x) == doctest::Approx(p.m(x)).epsilon(1e-12));
      CHECK(p.V(-x) == doctest::Approx(p.V(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tabulated profiles") {
  std::vector<double> xs, ms, vs;
  for (int i = -20; i <= 20; ++i) {
    const double x = 0.5 * i;
    xs.push_back(x);
    ms.push_back(1.0 + 0.5 * std::exp(-x * x));
    vs.push_back(0.1 * x * x);
  }
  const Profile p = make_profile(table_mass(xs, ms), table_potential(xs, vs), {-1.0, 0.5, 1.0});
  CHECK(p.m(0.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(p.V(3.0) == doctest::Approx(0.9).epsilon(1e-3));
  CHECK(p.m(-1.3) == doctest::Approx(p.m(1.3)).epsilon(1e-12));

  // table shorter than the validation window
  std::vector<double> short_x{-2, -1, 0, 1, 2}, short_m{1, 1, 1, 1, 1};
  CHECK(error_code_of([&] { make_profile(table_mass(short_x, short_m), zero_potential(), {}); }) ==
        ErrorCode::DomainError);
  std::vector<double> unsorted{0, -1, 1, 2};
  CHECK(error_code_of([&] { table_mass(unsorted, {1, 1, 1, 1}); }) == ErrorCode::InvalidArgument);

  std::vector<double> odd_v;
  for (double x : xs) odd_v.push_back(x * x + 0.2 * x);
  CHECK(error_code_of([&] { make_profile(constant_mass(1.0), table_potential(xs, odd_v), {}); }) ==
        ErrorCode::ParityViolation);
}
