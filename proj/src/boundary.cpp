#include "boundary.hpp"

#include "error.hpp"
#include "roe.hpp"

namespace swe {

BoundarySpec BoundarySpec::uniform(const Mesh& mesh, BoundaryKind k) {
  BoundarySpec spec;
  spec.kind.assign(mesh.edges.size(), k);
  return spec;
}

BoundarySpec BoundarySpec::from_tags(const Mesh& mesh,
                                     const std::map<int, BoundaryKind>& by_tag,
                                     BoundaryKind fallback) {
  BoundarySpec spec;
  spec.kind.assign(mesh.edges.size(), fallback);
  for (int e : mesh.boundary_edges) {
    auto it = by_tag.find(mesh.edges[e].tag);
    if (it != by_tag.end()) spec.kind[e] = it->second;
  }
  return spec;
}

Conserved ghost_state(const Conserved& w_in, Vec2 n, BoundaryKind kind) {
  if (kind == BoundaryKind::transmissive) return w_in;
  // Slip wall: reflect the normal momentum, keep depth and tangential part.
  const double qn = w_in.hu * n.x + w_in.hv * n.y;
  return {w_in.h, w_in.hu - 2.0 * qn * n.x, w_in.hv - 2.0 * qn * n.y};
}

Flux boundary_flux(const Conserved& w_in, Vec2 n, BoundaryKind kind, double g,
                   Scheme scheme, const RoeConfig& roe_config) {
  if (scheme == Scheme::roe)
    return roe_flux(w_in, ghost_state(w_in, n, kind), n, g, roe_config);

  // Characteristics scheme: physical flux of the interior/ghost primitive
  // average, evaluated in the edge frame. Averaging kills the normal
  // velocity at a wall identically, so no mass ever crosses it.
  const Primitive p = to_primitive(w_in);
  if (kind == BoundaryKind::wall) {
    const double pressure = 0.5 * g * p.h * p.h;
    return {0.0, pressure * n.x, pressure * n.y};
  }
  // Transmissive: the average of the state with itself is the state.
  return physical_flux(w_in, n, g);
}

}  // namespace swe
