#pragma once

#include <span>

#include "mesh.hpp"
#include "state.hpp"

namespace swe {

// Conservative update: subtracts the divergence of the per-edge fluxes,
// scaled by edge length and cell area, and integrates the Coriolis source
// explicitly from the old momenta. Iterates cells in index order so results
// are reproducible bit for bit.
ConservedField apply_update(const Mesh& mesh, const ConservedField& field,
                            std::span<const Flux> edge_flux,
                            const PhysParams& params, double dt);

}  // namespace swe
