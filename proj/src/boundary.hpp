#pragma once

#include <map>
#include <vector>

#include "mesh.hpp"
#include "state.hpp"

namespace swe {

struct RoeConfig;  // defined in roe.hpp

enum class BoundaryKind {
  transmissive,  // zero-gradient outflow: ghost copies the interior state
  wall,          // slip wall: normal velocity reflected, no mass flux
};

// Per-edge boundary behavior; entries are meaningful on boundary edges only.
struct BoundarySpec {
  std::vector<BoundaryKind> kind;

  static BoundarySpec uniform(const Mesh& mesh, BoundaryKind k);

  // Tagged edges get the mapped kind, untagged (or unmapped) ones the
  // fallback.
  static BoundarySpec from_tags(const Mesh& mesh,
                                const std::map<int, BoundaryKind>& by_tag,
                                BoundaryKind fallback);
};

// Mirror state outside a boundary edge with outward unit normal n.
Conserved ghost_state(const Conserved& w_in, Vec2 n, BoundaryKind kind);

// Numerical flux through a boundary edge, matching how each scheme treats
// interior edges: the characteristics scheme evaluates the physical flux of
// the interior/ghost average in the edge frame (so wall edges carry exactly
// zero mass flux), the Roe scheme solves the interior/ghost Riemann problem.
Flux boundary_flux(const Conserved& w_in, Vec2 n, BoundaryKind kind, double g,
                   Scheme scheme, const RoeConfig& roe_config);

}  // namespace swe
