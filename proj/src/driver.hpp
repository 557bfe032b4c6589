#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "exact_riemann.hpp"
#include "fvc.hpp"
#include "mesh.hpp"
#include "roe.hpp"
#include "state.hpp"

namespace swe {

enum class Case { accuracy_dam, circular_dam, partial_dam, from_file };

// Reservoir/dam/breach layout for the partial dam break: the dam occupies
// dam_x_min <= x <= dam_x_max with an opening breach_y_min <= y <=
// breach_y_max; cells inside the solid part are removed from the mesh.
struct PartialDamGeometry {
  double dam_x_min = 95.0;
  double dam_x_max = 105.0;
  double breach_y_min = 95.0;
  double breach_y_max = 170.0;
};

struct RunConfig {
  Case scenario = Case::accuracy_dam;
  Scheme scheme = Scheme::fvc;
  double cfl = 0.8;
  double alpha = 1.2;
  double g = 9.81;
  double f_c = 0.0;
  double t_end = -1.0;  // negative: use the case default

  // Mesh source: an explicit file wins; otherwise a generated rectangle of
  // nx-by-ny quads over the case's domain (0 = case default).
  std::string mesh_file;
  int nx = 0;
  int ny = 0;
  DiagonalPattern split = DiagonalPattern::alternating;

  // Boundary behavior: tagged edges first, then the fallback kind (-1 in
  // bc_default_set means "case default").
  bool bc_default_set = false;
  BoundaryKind bc_default = BoundaryKind::transmissive;
  std::map<int, BoundaryKind> bc_by_tag;

  // Planar dam break (accuracy case and external meshes).
  double x0 = 50.0;
  double h_left = 4.0;
  double h_right = 2.0;
  PartialDamGeometry dam;

  InterpolationMode interpolation = InterpolationMode::centroid_line;
  double entropy_fix_delta = -1.0;  // negative: 1e-6 sqrt(g max h(0))

  std::string out_dir;           // empty: no files written
  double output_interval = 0.0;  // 0: no periodic frames
  std::vector<double> output_times;

  std::vector<int> convergence_nx = {36, 50, 71, 100};
  std::vector<Scheme> convergence_schemes = {Scheme::fvc, Scheme::roe};
};

// Fills case-dependent defaults (t_end, mesh resolution, boundary kind) and
// validates ranges.
RunConfig resolve_defaults(const RunConfig& config);

// Per-step time series; row 0 is the initial state with dt = 0.
struct Diagnostics {
  std::vector<int> step;
  std::vector<double> time, dt, mass, momentum_x, momentum_y, min_depth,
      max_depth, max_froude;
};

struct RunResult {
  Mesh mesh;
  ConservedField field;
  Diagnostics diagnostics;
};

// Mesh for the configured case: generated rectangle (with the dam carved
// out for the partial dam break) or loaded from config.mesh_file.
Mesh make_case_mesh(const RunConfig& config);

// Initial depth/velocity for the configured case, sampled at centroids.
ConservedField init_case(const RunConfig& config, const Mesh& mesh);

// Full simulation: builds mesh and initial data, then advances to t_end
// with CFL steps clipped to land exactly on output instants and on t_end.
RunResult run(const RunConfig& config);

// Same loop on a caller-provided mesh and initial field.
RunResult run_with(const RunConfig& config, Mesh mesh, ConservedField initial);

// Relative L1 depth error against an exact sampler evaluated at centroids:
// sum of area * |h_i - exact| over sum of area * |exact|.
double l1_relative_error(const Mesh& mesh, const ConservedField& computed,
                         const std::function<double(Vec2, double)>& exact_h,
                         double t);

// Froude number sqrt(u^2 + v^2) / sqrt(g h) per cell.
std::vector<double> froude_field(const ConservedField& field,
                                 const PhysParams& params);

struct ConvergenceRow {
  Scheme scheme;
  int cells = 0;
  double l1_error = 0.0;
  double observed_order = 0.0;  // NaN on the first mesh of each scheme
};

// Runs the planar dam break on a sequence of generated meshes for each
// scheme and tabulates errors against the exact solution, with the observed
// order log(e_k/e_{k+1}) / log(sqrt(N_{k+1}/N_k)).
std::vector<ConvergenceRow> convergence_study(const RunConfig& config);

const char* scheme_name(Scheme s);
const char* case_name(Case c);

}  // namespace swe
