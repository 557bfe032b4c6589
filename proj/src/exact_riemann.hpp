#pragma once

#include <utility>

namespace swe {

// Planar dam break over a wet bed: still water of depth h_left for x < x0
// and depth h_right < h_left for x > x0.
struct DamBreakProblem {
  double h_left = 4.0;
  double h_right = 2.0;
  double g = 9.81;
  double x0 = 0.0;
};

// Constant state between the left rarefaction and the right bore.
struct MiddleState {
  double h = 0.0;
  double u = 0.0;
};

// Depth and velocity at (x, t).
struct FlowPoint {
  double h = 0.0;
  double u = 0.0;
};

// Middle depth solves
//   2 (sqrt(g h_l) - sqrt(g h_m)) = (h_m - h_r) sqrt(g (h_m + h_r) / (2 h_m h_r)),
// matching the rarefaction invariant on the left with the bore jump on the
// right; bisected on (h_right, h_left) to |interval| < 1e-12.
MiddleState middle_state(const DamBreakProblem& prob);

// Middle state plus the wave speeds needed for sampling.
struct DamBreakSolution {
  DamBreakProblem prob;
  MiddleState mid;
  double c_left = 0.0;      // celerity sqrt(g h_left)
  double c_mid = 0.0;       // celerity of the middle state
  double head_speed = 0.0;  // rarefaction head, -c_left
  double tail_speed = 0.0;  // rarefaction tail, u_m - c_mid
  double shock_speed = 0.0; // bore speed from mass conservation

  FlowPoint sample(double x, double t) const;
};

DamBreakSolution solve_dam_break(const DamBreakProblem& prob);

// One-off sampling convenience.
FlowPoint sample_dam_break(const DamBreakProblem& prob, double x, double t);

}  // namespace swe
