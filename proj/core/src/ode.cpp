#include "pdemlab/ode.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace pdemlab {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// b - b*, the embedded fourth-order error weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

}  // namespace

DormandPrince::DormandPrince(Rhs rhs, OdeSettings settings) : rhs_(std::move(rhs)), settings_(settings) {}

OdeOutcome DormandPrince::advance(double x0, double y0, double x1) {
  OdeOutcome out{OdeStatus::ok, x0, y0};
  const double span = x1 - x0;
  if (span == 0.0) return out;
  const double dir = span > 0.0 ? 1.0 : -1.0;
  double x = x0, y = y0;
  double h = step_ > 0.0 ? step_ : std::min(std::abs(span), settings_.max_step);
  h = std::min(h, settings_.max_step);
  double k1 = rhs_(x, y);
  const double min_step = 1e-14 * std::max(1.0, std::abs(x1));

  while (dir * (x1 - x) > 0.0) {
    if (steps_ + rejected_ >= settings_.max_steps) {
      out = {OdeStatus::too_many_steps, x, y};
      return out;
    }
    bool last = false;
    double hs = dir * h;
    if (dir * (x + hs - x1) >= 0.0) {
      hs = x1 - x;
      last = true;
    }
    const double k2 = rhs_(x + c2 * hs, y + hs * a21 * k1);
    const double k3 = rhs_(x + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
    const double k4 = rhs_(x + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = rhs_(x + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = rhs_(x + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = rhs_(x + hs, y_new);
    const double err_est = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale = settings_.abs_tol + settings_.rel_tol * std::max(std::abs(y), std::abs(y_new));
    const double err = std::isfinite(err_est) && std::isfinite(y_new) ? std::abs(err_est) / scale
                                                                      : std::numeric_limits<double>::infinity();
    if (err <= 1.0) {
      ++steps_;
      x = last ? x1 : x + hs;
      y = y_new;
      k1 = k7;
      if (std::abs(y) > settings_.blowup_cap) {
        out = {OdeStatus::blowup, x, y};
        return out;
      }
      const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      const double next = std::min(std::abs(hs) * grow, settings_.max_step);
      // A truncated final step says nothing about the natural step size.
      if (!last || next < h) h = next;
    } else {
      ++rejected_;
      const double shrink = std::isfinite(err) ? std::clamp(0.9 * std::pow(err, -0.25), 0.1, 0.5) : 0.1;
      h = std::abs(hs) * shrink;
      if (h < min_step) {
        out = {OdeStatus::step_underflow, x, y};
        return out;
      }
    }
  }
  step_ = h;
  out = {OdeStatus::ok, x, y};
  return out;
}

}  // namespace pdemlab
