#include "fvc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "roe.hpp"
#include "update.hpp"

namespace swe {

FlowSnapshot make_snapshot(const Mesh& mesh, const ConservedField& field) {
  if (field.cells.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument, "field does not match mesh cell count");
  FlowSnapshot snap;
  const std::size_t nc = mesh.cells.size();
  snap.h.resize(nc);
  snap.u.resize(nc);
  snap.v.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const Primitive p = to_primitive(field.cells[c]);
    snap.h[c] = p.h;
    snap.u[c] = p.u;
    snap.v[c] = p.v;
  }
  snap.vh = vertex_values(mesh, snap.h);
  snap.vu = vertex_values(mesh, snap.u);
  snap.vv = vertex_values(mesh, snap.v);
  return snap;
}

Vec2 backtrack_departure(Vec2 x_star, double u_eta_face, Vec2 n, double alpha,
                         double dt) {
  return x_star - (alpha * dt * u_eta_face) * n;
}

namespace {

// Distance from p to the segment [a, b].
double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
  return dist(p, a + t * d);
}

// Cell behind the boundary edge closest to p, used to clamp departure
// points that left the domain.
int nearest_boundary_cell(const Mesh& mesh, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  int cell = 0;
  for (int e : mesh.boundary_edges) {
    const Edge& edge = mesh.edges[e];
    const double d = segment_distance(p, mesh.vertices[edge.first].pos,
                                      mesh.vertices[edge.second].pos);
    if (d < best) {
      best = d;
      cell = edge.left;
    }
  }
  return cell;
}

}  // namespace

Primitive interpolate_state(const Mesh& mesh, const FlowSnapshot& snap,
                            InterpolationMode mode, Vec2 p, int hint_cell) {
  const std::optional<int> cell = locate_point(mesh, p, hint_cell);
  if (!cell) {
    const int c = nearest_boundary_cell(mesh, p);
    return {snap.h[c], snap.u[c], snap.v[c]};
  }
  if (mode == InterpolationMode::nearest_cell)
    return {snap.h[*cell], snap.u[*cell], snap.v[*cell]};

  const auto bc = barycentric_coords(mesh, *cell, p);
  const auto& vtx = mesh.cells[*cell].vertex;
  Primitive out;
  for (int k = 0; k < 3; ++k) {
    out.h += bc[k] * snap.vh[vtx[k]];
    out.u += bc[k] * snap.vu[vtx[k]];
    out.v += bc[k] * snap.vv[vtx[k]];
  }
  return out;
}

ProjectedState predictor_update(const ProjectedState& upstream,
                                double dh_deta, double dueta_deta, double g,
                                double f_c, double alpha_dt) {
  ProjectedState out;
  out.h = upstream.h - alpha_dt * upstream.h * dueta_deta;
  out.u_eta = upstream.u_eta - alpha_dt * g * dh_deta +
              alpha_dt * f_c * upstream.u_tau;
  out.u_tau = upstream.u_tau - alpha_dt * f_c * upstream.u_eta;
  return out;
}

Conserved predict_interface(const Mesh& mesh, const FlowSnapshot& snap,
                            const PhysParams& params,
                            const PredictorConfig& config, int edge_id,
                            double dt) {
  if (!mesh.is_interior(edge_id))
    fail(ErrorCode::invalid_argument,
         "interface prediction is defined on interior edges only");
  const Edge& edge = mesh.edges[edge_id];
  const Vec2 n = edge.normal;
  const int cl = edge.left;
  const int cr = edge.right;

  // Face-normal advection speed: mean of the two adjacent cell velocities
  // rotated into the edge frame.
  const EdgeFrameVelocity el = rotate_to_normal(snap.u[cl], snap.v[cl], n);
  const EdgeFrameVelocity er = rotate_to_normal(snap.u[cr], snap.v[cr], n);
  const double u_eta_face = 0.5 * (el.u_eta + er.u_eta);

  const Vec2 xd =
      backtrack_departure(edge.midpoint, u_eta_face, n, config.alpha, dt);
  Primitive hat;
  if (config.interpolation == InterpolationMode::centroid_line) {
    // Interpolate between the two adjacent cell states along the normal; the
    // clamp keeps the weights a convex combination even when the departure
    // point overshoots a centroid, so the interpolated depth stays positive.
    const Vec2 lc = mesh.cells[cl].centroid;
    const Vec2 rc = mesh.cells[cr].centroid;
    const double span = dot(rc - lc, n);
    const double theta = std::clamp(dot(xd - lc, n) / span, 0.0, 1.0);
    hat.h = (1.0 - theta) * snap.h[cl] + theta * snap.h[cr];
    hat.u = (1.0 - theta) * snap.u[cl] + theta * snap.u[cr];
    hat.v = (1.0 - theta) * snap.v[cl] + theta * snap.v[cr];
  } else {
    hat = interpolate_state(mesh, snap, config.interpolation, xd, cl);
  }
  const EdgeFrameVelocity hat_rot = rotate_to_normal(hat.u, hat.v, n);

  // Directional derivatives along the normal from the diamond gradients of
  // the depth and of the normal velocity component (rotation is linear, so
  // vertex averages rotate like cell values).
  const int vs = edge.first;
  const int vn = edge.second;
  const Vec2 grad_h = diamond_gradient(mesh, edge_id, snap.h[cl], snap.h[cr],
                                       snap.vh[vs], snap.vh[vn]);
  const EdgeFrameVelocity vvs = rotate_to_normal(snap.vu[vs], snap.vv[vs], n);
  const EdgeFrameVelocity vvn = rotate_to_normal(snap.vu[vn], snap.vv[vn], n);
  const Vec2 grad_ueta = diamond_gradient(mesh, edge_id, el.u_eta, er.u_eta,
                                          vvs.u_eta, vvn.u_eta);

  const ProjectedState pred = predictor_update(
      {hat.h, hat_rot.u_eta, hat_rot.u_tau}, dot(grad_h, n),
      dot(grad_ueta, n), params.g, params.f_c, config.alpha * dt);

  if (!(pred.h > 0.0)) {
    std::ostringstream os;
    os << "predicted non-positive depth " << pred.h << " at edge " << edge_id;
    fail(ErrorCode::runtime, os.str());
  }

  double u = 0.0, v = 0.0;
  rotate_from_normal({pred.u_eta, pred.u_tau}, n, u, v);
  return {pred.h, pred.h * u, pred.h * v};
}

ConservedField fvc_step(const Mesh& mesh, const ConservedField& field,
                        const PhysParams& params, const PredictorConfig& config,
                        const BoundarySpec& bc, double dt) {
  if (bc.kind.size() != mesh.edges.size())
    fail(ErrorCode::invalid_argument, "boundary spec does not match mesh");

  const FlowSnapshot snap = make_snapshot(mesh, field);
  const RoeConfig unused_roe{};
  std::vector<Flux> edge_flux(mesh.edges.size());
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Edge& edge = mesh.edges[e];
    if (edge.right >= 0) {
      const Conserved w_face = predict_interface(mesh, snap, params, config,
                                                 static_cast<int>(e), dt);
      edge_flux[e] = physical_flux(w_face, edge.normal, params.g);
    } else {
      edge_flux[e] = boundary_flux(field.cells[edge.left], edge.normal,
                                   bc.kind[e], params.g, Scheme::fvc,
                                   unused_roe);
    }
  }
  return apply_update(mesh, field, edge_flux, params, dt);
}

}  // namespace swe
