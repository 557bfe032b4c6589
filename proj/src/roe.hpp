#pragma once

#include "boundary.hpp"
#include "mesh.hpp"
#include "state.hpp"

namespace swe {

struct RoeConfig {
  // Harten entropy-fix threshold; eigenvalues with magnitude below it get
  // extra dissipation. Zero disables the fix.
  double entropy_fix_delta = 0.0;
};

// Roe approximate Riemann flux across an edge with unit normal n pointing
// from the left to the right state.
Flux roe_flux(const Conserved& w_left, const Conserved& w_right, Vec2 n,
              double g, const RoeConfig& config);

// One forward-Euler step of the first-order Roe scheme with the Coriolis
// source integrated in the same step.
ConservedField roe_step(const Mesh& mesh, const ConservedField& field,
                        const PhysParams& params, const BoundarySpec& bc,
                        double dt, const RoeConfig& config);

}  // namespace swe
