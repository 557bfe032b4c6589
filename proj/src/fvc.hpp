#pragma once

#include "boundary.hpp"
#include "mesh.hpp"
#include "state.hpp"

namespace swe {

enum class InterpolationMode {
  centroid_line,  // linear between the two adjacent cell states along the
                  // face normal; upwind-shifts with the departure offset
  barycentric,    // linear interpolation from vertex values in the host cell
  nearest_cell,   // piecewise-constant: value of the host cell
};

struct PredictorConfig {
  double alpha = 1.2;  // characteristic step strength
  InterpolationMode interpolation = InterpolationMode::centroid_line;
};

// Primitive flow data frozen at the beginning of a step: per-cell values and
// their inverse-distance averages at the vertices.
struct FlowSnapshot {
  std::vector<double> h, u, v;     // per cell
  std::vector<double> vh, vu, vv;  // per vertex
};

FlowSnapshot make_snapshot(const Mesh& mesh, const ConservedField& field);

// Foot of the characteristic through the edge midpoint x_star: one explicit
// Euler step backwards along the normal with the face-normal velocity.
Vec2 backtrack_departure(Vec2 x_star, double u_eta_face, Vec2 n, double alpha,
                         double dt);

// Primitive state at p. Outside the domain the value clamps to the cell
// behind the nearest boundary edge.
Primitive interpolate_state(const Mesh& mesh, const FlowSnapshot& snap,
                            InterpolationMode mode, Vec2 p, int hint_cell);

// Depth and velocity expressed in an edge frame.
struct ProjectedState {
  double h = 0.0;
  double u_eta = 0.0;
  double u_tau = 0.0;
};

// The three predictor equations in the edge frame: depth advances with the
// compression -h d(u_eta)/d(eta), the normal velocity with the depth
// gradient and the Coriolis coupling, the tangential velocity with Coriolis
// alone. alpha_dt is the premultiplied characteristic step alpha * dt.
ProjectedState predictor_update(const ProjectedState& upstream,
                                double dh_deta, double dueta_deta, double g,
                                double f_c, double alpha_dt);

// Predicted conserved interface state on an interior edge.
Conserved predict_interface(const Mesh& mesh, const FlowSnapshot& snap,
                            const PhysParams& params,
                            const PredictorConfig& config, int edge_id,
                            double dt);

// One predictor-corrector step of the characteristics scheme.
ConservedField fvc_step(const Mesh& mesh, const ConservedField& field,
                        const PhysParams& params, const PredictorConfig& config,
                        const BoundarySpec& bc, double dt);

}  // namespace swe
