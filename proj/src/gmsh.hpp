#pragma once

#include <iosfwd>
#include <string>

#include "mesh.hpp"

namespace swe {

// Reads a Gmsh MSH 2.2 ASCII file: triangles become cells, line elements
// attach their physical tag to the matching boundary edge, all other element
// types are ignored. Nodes not referenced by any triangle are dropped.
Mesh load_gmsh(const std::string& path);

// Same, from an already-open stream; `name` is used in error messages.
Mesh parse_gmsh(std::istream& in, const std::string& name);

}  // namespace swe
