#include "pdemlab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <utility>

#include "pdemlab/error.hpp"

namespace pdemlab {

namespace {

constexpr double kParityTolerance = 1e-12;
constexpr double kDerivativeTolerance = 1e-6;

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Natural cubic spline; immutable once built so it can be shared between
// the closures of a profile.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> xs, std::vector<double> ys) : x_(std::move(xs)), y_(std::move(ys)) {
    const std::size_t n = x_.size();
    if (n < 4 || y_.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "table needs at least 4 (x, value) pairs of equal length");
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (!(x_[i] > x_[i - 1])) throw Error(ErrorCode::InvalidArgument, "table abscissae must increase strictly");
    }
    // Tridiagonal solve for the second derivatives, natural end conditions.
    y2_.assign(n, 0.0);
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      const double a = h0 / 6.0;
      const double b = (h0 + h1) / 3.0;
      const double cc = h1 / 6.0;
      const double rhs = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
      const double denom = b - a * c[i - 1];
      c[i] = cc / denom;
      d[i] = (rhs - a * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      y2_[i] = d[i] - c[i] * y2_[i + 1];
      if (i == 1) break;
    }
  }

  double lo() const noexcept { return x_.front(); }
  double hi() const noexcept { return x_.back(); }

  // order 0, 1, 2 derivative.
  double eval(double x, int order) const {
    if (x < lo() - 1e-12 * std::abs(lo()) || x > hi() + 1e-12 * std::abs(hi())) {
      throw Error(ErrorCode::DomainError, "table evaluated outside its range at x=" + format_number(x));
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - x_.begin(), 1, x_.size() - 1));
    const double h = x_[i] - x_[i - 1];
    const double a = (x_[i] - x) / h;
    const double b = (x - x_[i - 1]) / h;
    switch (order) {
      case 0:
        return a * y_[i - 1] + b * y_[i] + ((a * a * a - a) * y2_[i - 1] + (b * b * b - b) * y2_[i]) * h * h / 6.0;
      case 1:
        return (y_[i] - y_[i - 1]) / h - (3.0 * a * a - 1.0) * h / 6.0 * y2_[i - 1] +
               (3.0 * b * b - 1.0) * h / 6.0 * y2_[i];
      default:
        return a * y2_[i - 1] + b * y2_[i];
    }
  }

 private:
  std::vector<double> x_, y_, y2_;
};

double table_support(const CubicSpline& s) { return std::min(-s.lo(), s.hi()); }

// Central difference with a step small enough that a jump in the third
// derivative (spline knots) stays below the comparison tolerance.
// Falls back to second-order one-sided formulas at the edge of a table.
double central_difference(const ScalarFunction& f, double x, double support) {
  const double step = 1e-6 * std::max(1.0, std::abs(x));
  if (x + step > support) return (3.0 * f(x) - 4.0 * f(x - step) + f(x - 2.0 * step)) / (2.0 * step);
  if (x - step < -support) return (-3.0 * f(x) + 4.0 * f(x + step) - f(x + 2.0 * step)) / (2.0 * step);
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

void check_parity(const ScalarFunction& f, const GridSpec& grid, const char* name) {
  for (std::size_t k = grid.centre(); k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double a = f(x);
    const double b = f(-x);
    if (std::abs(a - b) > kParityTolerance * std::max(std::abs(a), std::abs(b)) + 1e-300) {
      throw Error(ErrorCode::ParityViolation, std::string(name) + " is not even: " + name + "(" + format_number(x) +
                                                  ")=" + format_number(a) + ", " + name + "(" + format_number(-x) +
                                                  ")=" + format_number(b));
    }
  }
}

void check_derivative(const ScalarFunction& f, const ScalarFunction& df, double support, const GridSpec& grid,
                      const char* name) {
  RealField supplied(grid.size()), numeric(grid.size());
  double scale = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    supplied[k] = df(grid.x(k));
    numeric[k] = central_difference(f, grid.x(k), support);
    scale = std::max({scale, std::abs(supplied[k]), std::abs(f(grid.x(k))) / grid.half_width()});
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(supplied[k] - numeric[k]) > kDerivativeTolerance * std::max(scale, 1e-300)) {
      throw Error(ErrorCode::DerivativeMismatch, std::string("supplied ") + name + " disagrees with finite differences at x=" +
                                                     format_number(grid.x(k)) + ": " + format_number(supplied[k]) +
                                                     " vs " + format_number(numeric[k]));
    }
  }
}

}  // namespace

bool is_hermitian(const PTParameters& params) noexcept {
  return std::abs(params.beta1 + params.beta2) <= kHermitianTolerance;
}

MassProfile constant_mass(double m0) {
  return MassProfile{[m0](double) { return m0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
                     "constant(m0=" + format_number(m0) + ")"};
}

MassProfile rational_mass(double m0, double k) {
  if (k < 0.0) throw Error(ErrorCode::InvalidArgument, "rational mass needs k >= 0");
  return MassProfile{
      [m0, k](double x) { return m0 / (1.0 + k * x * x); },
      [m0, k](double x) {
        const double d = 1.0 + k * x * x;
        return -2.0 * m0 * k * x / (d * d);
      },
      [m0, k](double x) {
        const double d = 1.0 + k * x * x;
        return m0 * (6.0 * k * k * x * x - 2.0 * k) / (d * d * d);
      },
      "rational(m0=" + format_number(m0) + ",k=" + format_number(k) + ")"};
}

MassProfile table_mass(std::vector<double> xs, std::vector<double> ms) {
  auto spline = std::make_shared<const CubicSpline>(std::move(xs), std::move(ms));
  return MassProfile{[spline](double x) { return spline->eval(x, 0); },
                     [spline](double x) { return spline->eval(x, 1); },
                     [spline](double x) { return spline->eval(x, 2); }, "table", table_support(*spline)};
}

PotentialProfile harmonic_potential(double m, double omega) {
  const double k = m * omega * omega;
  return PotentialProfile{[k](double x) { return 0.5 * k * x * x; }, [k](double x) { return k * x; },
                          "harmonic(m=" + format_number(m) + ",omega=" + format_number(omega) + ")"};
}

PotentialProfile zero_potential() {
  return PotentialProfile{[](double) { return 0.0; }, [](double) { return 0.0; }, "zero"};
}

PotentialProfile linear_potential(double slope) {
  return PotentialProfile{[slope](double x) { return slope * x; }, [slope](double) { return slope; },
                          "linear(slope=" + format_number(slope) + ")"};
}

PotentialProfile table_potential(std::vector<double> xs, std::vector<double> vs) {
  auto spline = std::make_shared<const CubicSpline>(std::move(xs), std::move(vs));
  return PotentialProfile{[spline](double x) { return spline->eval(x, 0); },
                          [spline](double x) { return spline->eval(x, 1); }, "table", table_support(*spline)};
}

Profile::Profile(MassProfile mass, PotentialProfile potential, PTParameters params)
    : params_(params), mass_(std::move(mass)), potential_(std::move(potential)) {}

double Profile::support() const noexcept { return std::min(mass_.support, potential_.support); }

Profile Profile::unchecked(MassProfile mass, PotentialProfile potential, PTParameters params) {
  return Profile(std::move(mass), std::move(potential), params);
}

Profile make_profile(MassProfile mass, PotentialProfile potential, PTParameters params,
                     const GridSpec& validation_grid) {
  if (!(params.hbar > 0.0) || !std::isfinite(params.hbar)) {
    throw Error(ErrorCode::InvalidArgument, "hbar must be positive, got " + format_number(params.hbar));
  }
  if (!std::isfinite(params.beta1) || !std::isfinite(params.beta2)) {
    throw Error(ErrorCode::InvalidArgument, "beta1 and beta2 must be finite reals");
  }
  if (!mass.m || !mass.m_prime || !mass.m_double_prime || !potential.V || !potential.V_prime) {
    throw Error(ErrorCode::InvalidArgument, "profile functions must all be set");
  }
  const double L = validation_grid.half_width();
  if (mass.support < L || potential.support < L) {
    throw Error(ErrorCode::DomainError, "profile tables do not cover [-L, L] with L=" + format_number(L));
  }
  for (std::size_t k = 0; k < validation_grid.size(); ++k) {
    const double x = validation_grid.x(k);
    const double m = mass.m(x);
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw Error(ErrorCode::NonPositiveMass,
                  "m(" + format_number(x) + ")=" + format_number(m) + " is not a positive finite mass");
    }
    if (!std::isfinite(potential.V(x))) {
      throw Error(ErrorCode::InvalidArgument, "V is not finite at x=" + format_number(x));
    }
  }
  check_parity(mass.m, validation_grid, "m");
  check_parity(potential.V, validation_grid, "V");
  check_derivative(mass.m, mass.m_prime, mass.support, validation_grid, "m'");
  check_derivative(mass.m_prime, mass.m_double_prime, mass.support, validation_grid, "m''");
  check_derivative(potential.V, potential.V_prime, potential.support, validation_grid, "V'");
  return Profile(std::move(mass), std::move(potential), params);
}

}  // namespace pdemlab
