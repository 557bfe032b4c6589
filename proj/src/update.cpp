#include "update.hpp"

#include "error.hpp"

namespace swe {

ConservedField apply_update(const Mesh& mesh, const ConservedField& field,
                            std::span<const Flux> edge_flux,
                            const PhysParams& params, double dt) {
  if (field.cells.size() != mesh.cells.size() ||
      edge_flux.size() != mesh.edges.size())
    fail(ErrorCode::invalid_argument, "update inputs do not match the mesh");

  ConservedField out(mesh.cells.size());
  out.time = field.time + dt;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const Cell& cell = mesh.cells[c];
    Flux acc{0.0, 0.0, 0.0};
    for (int k = 0; k < 3; ++k) {
      const int e = cell.edge[k];
      const Edge& edge = mesh.edges[e];
      // Edge normals point left -> right, so the flux leaves the left cell.
      const double scale =
          (edge.left == static_cast<int>(c)) ? edge.length : -edge.length;
      acc[0] += scale * edge_flux[e][0];
      acc[1] += scale * edge_flux[e][1];
      acc[2] += scale * edge_flux[e][2];
    }
    const Conserved& w = field.cells[c];
    const double r = dt / cell.area;
    out.cells[c].h = w.h - r * acc[0];
    out.cells[c].hu = w.hu - r * acc[1] + dt * params.f_c * w.hv;
    out.cells[c].hv = w.hv - r * acc[2] - dt * params.f_c * w.hu;
  }
  return out;
}

}  // namespace swe
