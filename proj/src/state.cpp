#include "state.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace swe {

Primitive to_primitive(const Conserved& w) {
  if (!(w.h > 0.0))
    fail(ErrorCode::invalid_argument, "non-positive water depth");
  return {w.h, w.hu / w.h, w.hv / w.h};
}

Conserved to_conserved(const Primitive& p) {
  return {p.h, p.h * p.u, p.h * p.v};
}

EdgeFrameVelocity rotate_to_normal(double u, double v, Vec2 n) {
  return {u * n.x + v * n.y, v * n.x - u * n.y};
}

void rotate_from_normal(const EdgeFrameVelocity& r, Vec2 n, double& u,
                        double& v) {
  u = r.u_eta * n.x - r.u_tau * n.y;
  v = r.u_tau * n.x + r.u_eta * n.y;
}

Flux physical_flux(const Conserved& w, Vec2 n, double g) {
  const Primitive p = to_primitive(w);
  const double un = p.u * n.x + p.v * n.y;
  const double pressure = 0.5 * g * w.h * w.h;
  return {w.h * un, w.hu * un + pressure * n.x, w.hv * un + pressure * n.y};
}

double max_wave_speed(const Conserved& w, double g) {
  const Primitive p = to_primitive(w);
  return std::max(std::abs(p.u), std::abs(p.v)) + std::sqrt(g * w.h);
}

double compute_time_step(const Mesh& mesh, const ConservedField& field,
                         double cfl, double alpha, double g, double max_dt) {
  if (!(cfl > 0.0) || !(alpha > 0.0))
    fail(ErrorCode::invalid_argument,
         "cfl and predictor strength must be positive");
  if (field.cells.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument, "field does not match mesh cell count");

  std::vector<double> speed(mesh.cells.size());
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
    speed[c] = max_wave_speed(field.cells[c], g);

  double min_ratio = std::numeric_limits<double>::infinity();
  for (const Edge& edge : mesh.edges) {
    double lambda = speed[edge.left];
    if (edge.right >= 0) lambda = std::max(lambda, speed[edge.right]);
    if (lambda > 0.0) min_ratio = std::min(min_ratio, edge.length / lambda);
  }
  if (!std::isfinite(min_ratio))
    fail(ErrorCode::runtime,
         "no finite signal speed anywhere (fluid at rest with zero gravity)");

  return std::min(cfl * min_ratio / std::sqrt(2.0 * alpha), max_dt);
}

}  // namespace swe
