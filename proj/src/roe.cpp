#include "roe.hpp"

#include <cmath>

#include "error.hpp"
#include "update.hpp"

namespace swe {

namespace {

// Flux of the 1D states (h, h u_n, h u_t) in the edge frame.
Flux edge_frame_flux(double h, double un, double ut, double g) {
  return {h * un, h * un * un + 0.5 * g * h * h, h * un * ut};
}

// Harten-regularized absolute value.
double entropy_fixed_abs(double lambda, double delta) {
  const double a = std::abs(lambda);
  if (delta > 0.0 && a < delta)
    return (lambda * lambda + delta * delta) / (2.0 * delta);
  return a;
}

}  // namespace

Flux roe_flux(const Conserved& w_left, const Conserved& w_right, Vec2 n,
              double g, const RoeConfig& config) {
  const Primitive pl = to_primitive(w_left);
  const Primitive pr = to_primitive(w_right);
  const EdgeFrameVelocity rl = rotate_to_normal(pl.u, pl.v, n);
  const EdgeFrameVelocity rr = rotate_to_normal(pr.u, pr.v, n);

  const double hl = pl.h, hr = pr.h;
  const double sl = std::sqrt(hl), sr = std::sqrt(hr);
  const double un = (sl * rl.u_eta + sr * rr.u_eta) / (sl + sr);
  const double ut = (sl * rl.u_tau + sr * rr.u_tau) / (sl + sr);
  const double c = std::sqrt(0.5 * g * (hl + hr));

  const double dh = hr - hl;
  const double dqn = hr * rr.u_eta - hl * rl.u_eta;
  const double dqt = hr * rr.u_tau - hl * rl.u_tau;

  // Wave strengths for eigenvectors (1, un -/+ c, ut) and (0, 0, 1).
  const double a1 = 0.5 * ((un + c) * dh - dqn) / c;
  const double a3 = 0.5 * (dqn - (un - c) * dh) / c;
  const double a2 = dqt - ut * dh;

  const double l1 = un - c;
  const double l3 = un + c;
  const double f1 = entropy_fixed_abs(l1, config.entropy_fix_delta);
  const double f2 = entropy_fixed_abs(un, config.entropy_fix_delta);
  const double f3 = entropy_fixed_abs(l3, config.entropy_fix_delta);

  const Flux fl = edge_frame_flux(hl, rl.u_eta, rl.u_tau, g);
  const Flux fr = edge_frame_flux(hr, rr.u_eta, rr.u_tau, g);

  const double mass = 0.5 * (fl[0] + fr[0]) - 0.5 * (f1 * a1 + f3 * a3);
  const double mom_n =
      0.5 * (fl[1] + fr[1]) - 0.5 * (f1 * a1 * l1 + f3 * a3 * l3);
  const double mom_t = 0.5 * (fl[2] + fr[2]) -
                       0.5 * (f1 * a1 * ut + f2 * a2 + f3 * a3 * ut);

  double fx = 0.0, fy = 0.0;
  rotate_from_normal({mom_n, mom_t}, n, fx, fy);
  return {mass, fx, fy};
}

ConservedField roe_step(const Mesh& mesh, const ConservedField& field,
                        const PhysParams& params, const BoundarySpec& bc,
                        double dt, const RoeConfig& config) {
  if (field.cells.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument, "field does not match mesh cell count");
  if (bc.kind.size() != mesh.edges.size())
    fail(ErrorCode::invalid_argument, "boundary spec does not match mesh");

  std::vector<Flux> edge_flux(mesh.edges.size());
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Edge& edge = mesh.edges[e];
    if (edge.right >= 0) {
      edge_flux[e] = roe_flux(field.cells[edge.left], field.cells[edge.right],
                              edge.normal, params.g, config);
    } else {
      edge_flux[e] = boundary_flux(field.cells[edge.left], edge.normal,
                                   bc.kind[e], params.g, Scheme::roe, config);
    }
  }
  return apply_update(mesh, field, edge_flux, params, dt);
}

}  // namespace swe
