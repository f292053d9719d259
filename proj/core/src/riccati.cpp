#include "pdemlab/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "pdemlab/error.hpp"
#include "pdemlab/stencil.hpp"

namespace pdemlab {

std::string_view to_string(RiccatiRoute route) noexcept { return route == RiccatiRoute::inward ? "inward" : "outward"; }

namespace {

double rhs(const RiccatiForm& form, double x, double y) { return form.c(x) * (y * y + form.p(x) * y - form.q(x)); }

// Root of y^2 + p y - q selected so that the linearisation c (2y + p) has the
// sign `side`: attracting when integrating from x = side*inf towards 0.
std::optional<double> quasi_static_root(const RiccatiForm& form, double x, double side) {
  const double p = form.p(x);
  const double disc = p * p + 4.0 * form.q(x);
  if (!(disc >= 0.0) || !std::isfinite(disc)) return std::nullopt;
  return 0.5 * (-p + side * std::sqrt(disc));
}

std::string where(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Marches one half of the grid towards the centre. Returns false when the
// quasi-static start does not exist or the march blows up.
bool march_inward(const RiccatiForm& form, const GridSpec& grid, const RiccatiSettings& settings, double side,
                  RealField& samples) {
  const std::size_t n = grid.size();
  const std::size_t edge = side > 0 ? n - 1 : 0;
  const double x_edge = grid.x(edge);
  auto root_edge = quasi_static_root(form, x_edge, side);
  if (!root_edge) return false;

  const double rate = form.c(x_edge) * std::sqrt(std::max(0.0, form.p(x_edge) * form.p(x_edge) + 4.0 * form.q(x_edge)));
  double extension = 0.0;
  if (rate > 0.0) {
    extension = std::min({settings.extension_decay / rate, grid.half_width(), form.support - std::abs(x_edge)});
    extension = std::max(0.0, extension);
  }
  double x_start = x_edge + side * extension;
  auto root_start = quasi_static_root(form, x_start, side);
  if (!root_start) {
    x_start = x_edge;
    root_start = root_edge;
  }

  OdeSettings ode = settings.ode;
  ode.max_step = std::min(ode.max_step, grid.spacing());
  DormandPrince stepper([&form](double x, double y) { return rhs(form, x, y); }, ode);
  OdeOutcome out = stepper.advance(x_start, *root_start, x_edge);
  if (out.status != OdeStatus::ok) return false;
  samples[edge] = out.y;
  const std::size_t c = grid.centre();
  if (side > 0) {
    for (std::size_t k = n - 1; k > c; --k) {
      out = stepper.advance(grid.x(k), samples[k], grid.x(k - 1));
      if (out.status != OdeStatus::ok) return false;
      samples[k - 1] = out.y;
    }
  } else {
    for (std::size_t k = 0; k < c; ++k) {
      out = stepper.advance(grid.x(k), samples[k], grid.x(k + 1));
      if (out.status != OdeStatus::ok) return false;
      samples[k + 1] = out.y;
    }
  }
  return true;
}

void march_outward(const RiccatiForm& form, const GridSpec& grid, const RiccatiSettings& settings, double ic,
                   RealField& samples) {
  OdeSettings ode = settings.ode;
  ode.max_step = std::min(ode.max_step, grid.spacing());
  const std::size_t c = grid.centre();
  samples[c] = ic;
  for (double side : {1.0, -1.0}) {
    DormandPrince stepper([&form](double x, double y) { return rhs(form, x, y); }, ode);
    std::size_t k = c;
    while (side > 0 ? k + 1 < grid.size() : k > 0) {
      const std::size_t next = side > 0 ? k + 1 : k - 1;
      const OdeOutcome out = stepper.advance(grid.x(k), samples[k], grid.x(next));
      if (out.status == OdeStatus::blowup) {
        throw Error(ErrorCode::PoleDetected, "Riccati solution exceeds |y| = " + where(ode.blowup_cap) +
                                                 " near x=" + where(out.x) + " (initial value " + where(ic) + ")");
      }
      if (out.status != OdeStatus::ok) {
        throw Error(ErrorCode::PoleDetected, "Riccati integration stalled near x=" + where(out.x) +
                                                 ", step size underflow before reaching the grid edge");
      }
      samples[next] = out.y;
      k = next;
    }
  }
}

}  // namespace

double riccati_residual(const RiccatiForm& form, const GridSpec& grid, std::span<const double> samples) {
  require_on_grid(samples.size(), grid, "Riccati samples");
  const RealField d = differentiate(samples, grid.spacing(), 6);
  double worst = 0.0;
  for (std::size_t k = 3; k + 3 < samples.size(); ++k) {
    const double x = grid.x(k);
    const double r = std::abs(d[k] - rhs(form, x, samples[k])) / form.c(x);
    worst = std::max(worst, std::isfinite(r) ? r : std::numeric_limits<double>::infinity());
  }
  return worst;
}

RiccatiSolution solve_riccati(const RiccatiForm& form, const GridSpec& grid, double ic, double mu,
                              const RiccatiSettings& settings) {
  if (!std::isfinite(ic)) throw Error(ErrorCode::InvalidArgument, "Riccati initial value must be finite");
  if (form.support < grid.half_width()) {
    throw Error(ErrorCode::DomainError, "Riccati coefficients are not defined on the whole grid");
  }
  RiccatiSolution sol;
  sol.mu = mu;
  sol.ic_value = ic;
  sol.field_samples.assign(grid.size(), 0.0);

  bool done = false;
  if (settings.allow_inward) {
    RealField right(grid.size(), 0.0), left(grid.size(), 0.0);
    if (march_inward(form, grid, settings, 1.0, right) && march_inward(form, grid, settings, -1.0, left)) {
      const std::size_t c = grid.centre();
      const double tol = settings.match_tol * std::max(1.0, std::abs(ic));
      if (std::abs(right[c] - ic) <= tol && std::abs(left[c] - ic) <= tol) {
        for (std::size_t k = 0; k < c; ++k) sol.field_samples[k] = left[k];
        for (std::size_t k = c + 1; k < grid.size(); ++k) sol.field_samples[k] = right[k];
        sol.field_samples[c] = 0.5 * (left[c] + right[c]);
        sol.route = RiccatiRoute::inward;
        done = true;
      }
    }
  }
  if (!done) {
    march_outward(form, grid, settings, ic, sol.field_samples);
    sol.route = RiccatiRoute::outward;
  }

  sol.derivative_samples.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    sol.derivative_samples[k] = rhs(form, grid.x(k), sol.field_samples[k]);
  }
  sol.residual_norm = riccati_residual(form, grid, sol.field_samples);
  if (!(sol.residual_norm <= settings.residual_tol)) {
    throw Error(ErrorCode::ResidualTooLarge, "Riccati residual " + where(sol.residual_norm) + " exceeds " +
                                                 where(settings.residual_tol) + " (" +
                                                 std::string(to_string(sol.route)) + " route)");
  }
  return sol;
}

}  // namespace pdemlab
