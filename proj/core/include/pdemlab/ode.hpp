#pragma once

#include <functional>
#include <limits>

namespace pdemlab {

struct OdeSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  /// Upper bound on |step|; the Riccati solvers set it to the grid spacing.
  double max_step = std::numeric_limits<double>::infinity();
  /// |y| above this is treated as a pole of the solution.
  double blowup_cap = 1e8;
  long max_steps = 2'000'000;
};

enum class OdeStatus { ok, blowup, step_underflow, too_many_steps };

struct OdeOutcome {
  OdeStatus status = OdeStatus::ok;
  double x = 0.0;  // where integration stopped
  double y = 0.0;
};

/// Adaptive Dormand-Prince 5(4) integrator for a scalar ODE y' = f(x, y).
/// Keeps its step-size estimate between calls so a solution can be marched
/// node to node without restarting the controller. Integrates in either
/// direction.
class DormandPrince {
 public:
  using Rhs = std::function<double(double, double)>;

  DormandPrince(Rhs rhs, OdeSettings settings);

  /// Advances from (x0, y0) to x1, landing exactly on x1 unless integration
  /// fails; the outcome then holds the last accepted point.
  OdeOutcome advance(double x0, double y0, double x1);

  long steps_taken() const noexcept { return steps_; }
  long rejected_steps() const noexcept { return rejected_; }

 private:
  Rhs rhs_;
  OdeSettings settings_;
  double step_ = 0.0;  // magnitude of the next trial step, 0 = pick one
  long steps_ = 0;
  long rejected_ = 0;
};

}  // namespace pdemlab
