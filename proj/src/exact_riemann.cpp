#include "exact_riemann.hpp"

#include <cmath>

#include "error.hpp"

namespace swe {

namespace {

// Residual of the depth condition; negative at h_right, positive at h_left.
double depth_residual(const DamBreakProblem& p, double h) {
  const double lhs = 2.0 * (std::sqrt(p.g * p.h_left) - std::sqrt(p.g * h));
  const double rhs = (h - p.h_right) *
                     std::sqrt(p.g * (h + p.h_right) / (2.0 * h * p.h_right));
  return lhs - rhs;
}

}  // namespace

MiddleState middle_state(const DamBreakProblem& prob) {
  if (!(prob.h_right > 0.0) || !(prob.h_left > 0.0))
    fail(ErrorCode::invalid_argument, "dam break depths must be positive");
  if (!(prob.g > 0.0))
    fail(ErrorCode::invalid_argument, "gravity must be positive");
  if (prob.h_left < prob.h_right)
    fail(ErrorCode::invalid_argument,
         "dam break expects the deeper water on the left");
  if (prob.h_left == prob.h_right) return {prob.h_left, 0.0};

  double lo = prob.h_right;
  double hi = prob.h_left;
  if (!(depth_residual(prob, lo) > 0.0) || !(depth_residual(prob, hi) < 0.0))
    fail(ErrorCode::runtime, "middle depth does not bracket in (h_r, h_l)");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (depth_residual(prob, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double h = 0.5 * (lo + hi);
  // Velocity from the rarefaction invariant u + 2 sqrt(g h) = 2 sqrt(g h_l).
  const double u = 2.0 * (std::sqrt(prob.g * prob.h_left) -
                          std::sqrt(prob.g * h));
  return {h, u};
}

DamBreakSolution solve_dam_break(const DamBreakProblem& prob) {
  DamBreakSolution sol;
  sol.prob = prob;
  sol.mid = middle_state(prob);
  sol.c_left = std::sqrt(prob.g * prob.h_left);
  sol.c_mid = std::sqrt(prob.g * sol.mid.h);
  sol.head_speed = -sol.c_left;
  sol.tail_speed = sol.mid.u - sol.c_mid;
  // Bore speed from mass conservation across the jump to still water.
  sol.shock_speed = (sol.mid.h == prob.h_right)
                        ? 0.0
                        : sol.mid.h * sol.mid.u / (sol.mid.h - prob.h_right);
  return sol;
}

FlowPoint DamBreakSolution::sample(double x, double t) const {
  if (t < 0.0) fail(ErrorCode::invalid_argument, "sample time must be >= 0");
  if (t == 0.0)
    return (x <= prob.x0) ? FlowPoint{prob.h_left, 0.0}
                          : FlowPoint{prob.h_right, 0.0};
  const double xi = (x - prob.x0) / t;
  if (xi <= head_speed) return {prob.h_left, 0.0};
  if (xi >= shock_speed) return {prob.h_right, 0.0};
  if (xi >= tail_speed) return {mid.h, mid.u};
  // Inside the rarefaction fan.
  const double h = (2.0 * c_left - xi) * (2.0 * c_left - xi) / (9.0 * prob.g);
  const double u = (2.0 / 3.0) * (xi + c_left);
  return {h, u};
}

FlowPoint sample_dam_break(const DamBreakProblem& prob, double x, double t) {
  return solve_dam_break(prob).sample(x, t);
}

}  // namespace swe
