#pragma once

#include <array>
#include <limits>
#include <vector>

#include "geometry.hpp"
#include "mesh.hpp"

namespace swe {

// Physical parameters: gravity and the Coriolis parameter.
struct PhysParams {
  double g = 9.81;
  double f_c = 0.0;
};

// Conserved variables: water depth and depth-integrated momentum.
struct Conserved {
  double h = 0.0;
  double hu = 0.0;
  double hv = 0.0;
};

// Primitive variables derived from a conserved state.
struct Primitive {
  double h = 0.0;
  double u = 0.0;
  double v = 0.0;
};

// Velocity in the frame of an edge: normal component u_eta along the edge
// normal, tangential component u_tau across it.
struct EdgeFrameVelocity {
  double u_eta = 0.0;
  double u_tau = 0.0;
};

// Flux triple ordered like the conserved variables (mass, x-, y-momentum).
using Flux = std::array<double, 3>;

struct ConservedField {
  std::vector<Conserved> cells;
  double time = 0.0;

  explicit ConservedField(std::size_t n = 0) : cells(n) {}
};

enum class Scheme { fvc, roe };

Primitive to_primitive(const Conserved& w);
Conserved to_conserved(const Primitive& p);

// Velocity components in the frame of a unit normal n and back. The tangent
// is the counterclockwise quarter turn of n, so round trips are exact up to
// rounding and speed magnitude is preserved.
EdgeFrameVelocity rotate_to_normal(double u, double v, Vec2 n);
void rotate_from_normal(const EdgeFrameVelocity& r, Vec2 n, double& u,
                        double& v);

// Physical flux of the conserved state projected on direction n:
// (h u.n, h u u.n + g h^2/2 n_x, h v u.n + g h^2/2 n_y).
Flux physical_flux(const Conserved& w, Vec2 n, double g);

// Largest component-wise signal speed max(|u|,|v|) + sqrt(g h); rejects
// non-positive depth.
double max_wave_speed(const Conserved& w, double g);

// Global stable step: cfl * min_edges(length_e / speed_e) / sqrt(2 alpha),
// where speed_e is the fastest adjacent-cell signal on edge e. Clamped to
// max_dt. Fails when every cell is at rest with zero gravity (no finite
// signal speed).
double compute_time_step(const Mesh& mesh, const ConservedField& field,
                         double cfl, double alpha, double g,
                         double max_dt = std::numeric_limits<double>::infinity());

}  // namespace swe
