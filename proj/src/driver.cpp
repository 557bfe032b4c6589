#include "driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "error.hpp"
#include "gmsh.hpp"
#include "output.hpp"
#include "update.hpp"

namespace swe {

const char* scheme_name(Scheme s) {
  return s == Scheme::fvc ? "fvc" : "roe";
}

const char* case_name(Case c) {
  switch (c) {
    case Case::accuracy_dam: return "accuracy_dam";
    case Case::circular_dam: return "circular_dam";
    case Case::partial_dam: return "partial_dam";
    case Case::from_file: return "from_file";
  }
  return "?";
}

namespace {

struct Domain {
  double x0, x1, y0, y1;
};

Domain case_domain(Case c) {
  switch (c) {
    case Case::accuracy_dam: return {0.0, 100.0, 0.0, 100.0};
    case Case::circular_dam: return {-10.0, 10.0, -10.0, 10.0};
    case Case::partial_dam: return {0.0, 200.0, 0.0, 200.0};
    case Case::from_file: break;
  }
  fail(ErrorCode::invalid_argument, "external meshes have no canonical domain");
}

// Drops triangles whose centroid lies in the solid part of the dam and
// compacts the vertex list.
TriangleSoup carve_dam(const TriangleSoup& soup,
                       const PartialDamGeometry& dam) {
  TriangleSoup out;
  std::vector<int> vmap(soup.points.size(), -1);
  auto remap = [&](int v) {
    if (vmap[v] < 0) {
      vmap[v] = static_cast<int>(out.points.size());
      out.points.push_back(soup.points[v]);
    }
    return vmap[v];
  };
  for (const auto& tri : soup.triangles) {
    const Vec2 c = (soup.points[tri[0]] + soup.points[tri[1]] +
                    soup.points[tri[2]]) / 3.0;
    const bool in_dam_band = c.x > dam.dam_x_min && c.x < dam.dam_x_max;
    const bool in_breach = c.y > dam.breach_y_min && c.y < dam.breach_y_max;
    if (in_dam_band && !in_breach) continue;
    out.triangles.push_back({remap(tri[0]), remap(tri[1]), remap(tri[2])});
  }
  if (out.triangles.empty())
    fail(ErrorCode::mesh, "dam geometry removes every cell");
  for (const auto& seg : soup.tagged_segments)
    if (vmap[seg[0]] >= 0 && vmap[seg[1]] >= 0)
      out.tagged_segments.push_back({vmap[seg[0]], vmap[seg[1]], seg[2]});
  return out;
}

}  // namespace

RunConfig resolve_defaults(const RunConfig& in) {
  RunConfig cfg = in;

  if (cfg.t_end < 0.0) {
    switch (cfg.scenario) {
      case Case::accuracy_dam: cfg.t_end = 5.5; break;
      case Case::circular_dam: cfg.t_end = 16.0; break;
      case Case::partial_dam: cfg.t_end = 8.2; break;
      case Case::from_file:
        fail(ErrorCode::invalid_argument,
             "t_end is required when running on an external mesh");
    }
  }
  if (cfg.nx <= 0) {
    switch (cfg.scenario) {
      case Case::accuracy_dam: cfg.nx = 50; break;
      case Case::circular_dam: cfg.nx = 71; break;
      case Case::partial_dam: cfg.nx = 120; break;
      case Case::from_file: cfg.nx = 1; break;  // unused
    }
  }
  if (cfg.ny <= 0) cfg.ny = cfg.nx;
  if (!cfg.bc_default_set) {
    // The planar dam break is one-dimensional: wall sides act as the exact
    // lateral symmetry planes. The circular case radiates outward and wants
    // open boundaries; the breach case is a closed basin.
    cfg.bc_default = (cfg.scenario == Case::partial_dam ||
                      cfg.scenario == Case::accuracy_dam)
                         ? BoundaryKind::wall
                         : BoundaryKind::transmissive;
    cfg.bc_default_set = true;
  }

  if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0)
    fail(ErrorCode::invalid_argument, "cfl must lie in (0, 1]");
  if (!(cfg.alpha > 0.0))
    fail(ErrorCode::invalid_argument, "alpha must be positive");
  if (!(cfg.g > 0.0))
    fail(ErrorCode::invalid_argument, "gravity must be positive");
  if (!(cfg.t_end >= 0.0))
    fail(ErrorCode::invalid_argument, "t_end must be nonnegative");
  if (cfg.scenario == Case::from_file && cfg.mesh_file.empty())
    fail(ErrorCode::invalid_argument,
         "a mesh file is required for the from_file case");
  if (!(cfg.h_left > 0.0) || !(cfg.h_right > 0.0))
    fail(ErrorCode::invalid_argument, "dam break depths must be positive");
  if (!(cfg.dam.dam_x_min < cfg.dam.dam_x_max) ||
      !(cfg.dam.breach_y_min < cfg.dam.breach_y_max))
    fail(ErrorCode::invalid_argument, "dam geometry extents must be ordered");
  if (!(cfg.output_interval >= 0.0))
    fail(ErrorCode::invalid_argument, "output interval must be nonnegative");
  return cfg;
}

Mesh make_case_mesh(const RunConfig& in) {
  const RunConfig cfg = resolve_defaults(in);
  if (!cfg.mesh_file.empty()) return load_gmsh(cfg.mesh_file);
  const Domain d = case_domain(cfg.scenario);
  TriangleSoup soup =
      rect_triangulation(d.x0, d.x1, d.y0, d.y1, cfg.nx, cfg.ny, cfg.split);
  if (cfg.scenario == Case::partial_dam) soup = carve_dam(soup, cfg.dam);
  return build_connectivity(soup);
}

ConservedField init_case(const RunConfig& in, const Mesh& mesh) {
  const RunConfig cfg = resolve_defaults(in);

  // External meshes must still cover the case's canonical domain.
  if (!cfg.mesh_file.empty() && cfg.scenario != Case::from_file) {
    const Domain d = case_domain(cfg.scenario);
    const double tol = 0.25 * std::max(d.x1 - d.x0, d.y1 - d.y0);
    if (std::abs(mesh.bbox_min.x - d.x0) > tol ||
        std::abs(mesh.bbox_max.x - d.x1) > tol ||
        std::abs(mesh.bbox_min.y - d.y0) > tol ||
        std::abs(mesh.bbox_max.y - d.y1) > tol) {
      std::ostringstream os;
      os << "mesh bounding box does not match the " << case_name(cfg.scenario)
         << " domain [" << d.x0 << "," << d.x1 << "]x[" << d.y0 << ","
         << d.y1 << "]";
      fail(ErrorCode::mesh, os.str());
    }
  }

  ConservedField field(mesh.cells.size());
  switch (cfg.scenario) {
    case Case::accuracy_dam:
    case Case::from_file:
      for (std::size_t c = 0; c < mesh.cells.size(); ++c)
        field.cells[c].h =
            mesh.cells[c].centroid.x <= cfg.x0 ? cfg.h_left : cfg.h_right;
      break;
    case Case::circular_dam: {
      const double a = 2.5, b = 0.4, width = 0.1;
      for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const Vec2 p = mesh.cells[c].centroid;
        const double r = std::sqrt(a * p.x * p.x + b * p.y * p.y);
        field.cells[c].h = 1.0 + 0.25 * (1.0 - std::tanh((r - 1.0) / width));
      }
      break;
    }
    case Case::partial_dam: {
      const double xm = 0.5 * (cfg.dam.dam_x_min + cfg.dam.dam_x_max);
      for (std::size_t c = 0; c < mesh.cells.size(); ++c)
        field.cells[c].h =
            mesh.cells[c].centroid.x < xm ? cfg.h_left : cfg.h_right;
      break;
    }
  }
  return field;
}

namespace {

struct StepStats {
  double mass = 0, momentum_x = 0, momentum_y = 0;
  double min_depth = 0, max_depth = 0, max_froude = 0;
};

StepStats field_stats(const Mesh& mesh, const ConservedField& field,
                      const PhysParams& params) {
  StepStats s;
  s.min_depth = std::numeric_limits<double>::infinity();
  s.max_depth = -s.min_depth;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const Conserved& w = field.cells[c];
    const double area = mesh.cells[c].area;
    s.mass += area * w.h;
    s.momentum_x += area * w.hu;
    s.momentum_y += area * w.hv;
    s.min_depth = std::min(s.min_depth, w.h);
    s.max_depth = std::max(s.max_depth, w.h);
    if (w.h > 0.0) {
      const double fr = std::hypot(w.hu, w.hv) /
                        (w.h * std::sqrt(params.g * w.h));
      s.max_froude = std::max(s.max_froude, fr);
    }
  }
  return s;
}

void check_health(const ConservedField& field, int step, double t) {
  for (std::size_t c = 0; c < field.cells.size(); ++c) {
    const Conserved& w = field.cells[c];
    if (!std::isfinite(w.h) || !std::isfinite(w.hu) || !std::isfinite(w.hv)) {
      std::ostringstream os;
      os << "NaN detected in cell " << c << " at step " << step << " (t=" << t
         << ")";
      fail(ErrorCode::runtime, os.str());
    }
    if (w.h <= 1e-12) {
      std::ostringstream os;
      os << "positivity failure: depth " << w.h << " in cell " << c
         << " at t=" << t << " (step " << step << ")";
      fail(ErrorCode::runtime, os.str());
    }
  }
}

std::string frame_path(const std::string& dir, int index) {
  char name[32];
  std::snprintf(name, sizeof(name), "frame_%04d.vtk", index);
  return dir + "/" + name;
}

}  // namespace

RunResult run_with(const RunConfig& in, Mesh mesh, ConservedField initial) {
  const RunConfig cfg = resolve_defaults(in);
  if (initial.cells.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument, "initial field does not match mesh");

  const PhysParams params{cfg.g, cfg.f_c};
  const BoundarySpec bc =
      BoundarySpec::from_tags(mesh, cfg.bc_by_tag, cfg.bc_default);
  const PredictorConfig predictor{cfg.alpha, cfg.interpolation};
  RoeConfig roe_cfg;
  if (cfg.entropy_fix_delta >= 0.0) {
    roe_cfg.entropy_fix_delta = cfg.entropy_fix_delta;
  } else {
    double h_max = 0.0;
    for (const Conserved& w : initial.cells) h_max = std::max(h_max, w.h);
    roe_cfg.entropy_fix_delta = 1e-6 * std::sqrt(cfg.g * h_max);
  }

  // Instants the time loop must land on exactly: requested output times,
  // periodic multiples, and the end time itself.
  std::vector<double> events;
  for (double t : cfg.output_times)
    if (t > 0.0 && t < cfg.t_end) events.push_back(t);
  if (cfg.output_interval > 0.0) {
    if (cfg.t_end / cfg.output_interval > 1e6)
      fail(ErrorCode::invalid_argument, "output interval is too small");
    for (int k = 1; k * cfg.output_interval < cfg.t_end; ++k)
      events.push_back(k * cfg.output_interval);
  }
  events.push_back(cfg.t_end);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  const bool writing = !cfg.out_dir.empty();
  std::optional<DiagnosticsWriter> diag_csv;
  int frame_index = 0;
  if (writing) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
      fail(ErrorCode::io, "cannot create output directory '" + cfg.out_dir +
                              "': " + ec.message());
    diag_csv.emplace(cfg.out_dir + "/diagnostics.csv");
  }

  RunResult res{std::move(mesh), std::move(initial), {}};
  res.field.time = 0.0;
  Diagnostics& diag = res.diagnostics;

  auto record = [&](int step, double t, double dt) {
    const StepStats s = field_stats(res.mesh, res.field, params);
    diag.step.push_back(step);
    diag.time.push_back(t);
    diag.dt.push_back(dt);
    diag.mass.push_back(s.mass);
    diag.momentum_x.push_back(s.momentum_x);
    diag.momentum_y.push_back(s.momentum_y);
    diag.min_depth.push_back(s.min_depth);
    diag.max_depth.push_back(s.max_depth);
    diag.max_froude.push_back(s.max_froude);
    if (diag_csv)
      diag_csv->row(step, t, dt, s.mass, s.momentum_x, s.momentum_y,
                    s.min_depth, s.max_depth, s.max_froude);
  };

  check_health(res.field, 0, 0.0);
  record(0, 0.0, 0.0);
  if (writing)
    write_vtk(res.mesh, make_frame(res.mesh, res.field, params),
              frame_path(cfg.out_dir, frame_index++));

  double t = 0.0;
  int step = 0;
  std::size_t next_event = 0;
  while (next_event < events.size()) {
    const double target = events[next_event];
    if (t >= target) {
      ++next_event;
      continue;
    }
    const double dt = compute_time_step(res.mesh, res.field, cfg.cfl,
                                        cfg.alpha, cfg.g, target - t);
    if (!(dt > 1e-12 * cfg.t_end))
      fail(ErrorCode::runtime, "time step collapsed; aborting run");
    const bool hit = dt >= target - t;

    res.field = (cfg.scheme == Scheme::fvc)
                    ? fvc_step(res.mesh, res.field, params, predictor, bc, dt)
                    : roe_step(res.mesh, res.field, params, bc, dt, roe_cfg);
    ++step;
    t = hit ? target : t + dt;  // land on events without rounding residue
    res.field.time = t;
    check_health(res.field, step, t);
    record(step, t, dt);
    if (hit) {
      if (writing)
        write_vtk(res.mesh, make_frame(res.mesh, res.field, params),
                  frame_path(cfg.out_dir, frame_index++));
      ++next_event;
    }
  }
  return res;
}

RunResult run(const RunConfig& in) {
  const RunConfig cfg = resolve_defaults(in);
  Mesh mesh = make_case_mesh(cfg);
  ConservedField field = init_case(cfg, mesh);
  return run_with(cfg, std::move(mesh), std::move(field));
}

double l1_relative_error(const Mesh& mesh, const ConservedField& computed,
                         const std::function<double(Vec2, double)>& exact_h,
                         double t) {
  if (computed.cells.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument, "field does not match mesh cell count");
  double num = 0.0, den = 0.0;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const double area = mesh.cells[c].area;
    const double exact = exact_h(mesh.cells[c].centroid, t);
    num += area * std::abs(computed.cells[c].h - exact);
    den += area * std::abs(exact);
  }
  if (!(den > 0.0))
    fail(ErrorCode::invalid_argument,
         "exact depth vanishes; relative error undefined");
  return num / den;
}

std::vector<double> froude_field(const ConservedField& field,
                                 const PhysParams& params) {
  std::vector<double> out(field.cells.size());
  for (std::size_t c = 0; c < field.cells.size(); ++c) {
    const Primitive p = to_primitive(field.cells[c]);
    out[c] = std::hypot(p.u, p.v) / std::sqrt(params.g * p.h);
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& in) {
  const RunConfig base = resolve_defaults(in);
  if (base.scenario != Case::accuracy_dam)
    fail(ErrorCode::invalid_argument,
         "convergence studies run on the planar dam break case");
  if (base.convergence_nx.size() < 2)
    fail(ErrorCode::invalid_argument,
         "convergence study needs at least two meshes");
  for (std::size_t k = 1; k < base.convergence_nx.size(); ++k)
    if (base.convergence_nx[k] <= base.convergence_nx[k - 1])
      fail(ErrorCode::invalid_argument,
           "convergence mesh sequence must be strictly increasing");

  const DamBreakSolution sol =
      solve_dam_break({base.h_left, base.h_right, base.g, base.x0});
  auto exact = [&sol](Vec2 p, double t) { return sol.sample(p.x, t).h; };

  std::vector<ConvergenceRow> rows;
  for (Scheme scheme : base.convergence_schemes) {
    double prev_error = 0.0;
    int prev_cells = 0;
    for (std::size_t k = 0; k < base.convergence_nx.size(); ++k) {
      RunConfig cfg = base;
      cfg.scheme = scheme;
      cfg.nx = base.convergence_nx[k];
      cfg.ny = cfg.nx;
      cfg.out_dir.clear();
      cfg.output_interval = 0.0;
      cfg.output_times.clear();
      const RunResult res = run(cfg);
      ConvergenceRow row;
      row.scheme = scheme;
      row.cells = static_cast<int>(res.mesh.cells.size());
      row.l1_error =
          l1_relative_error(res.mesh, res.field, exact, cfg.t_end);
      row.observed_order = std::numeric_limits<double>::quiet_NaN();
      if (k > 0 && prev_error > 0.0 && row.l1_error > 0.0)
        row.observed_order =
            std::log(prev_error / row.l1_error) /
            std::log(std::sqrt(static_cast<double>(row.cells) / prev_cells));
      prev_error = row.l1_error;
      prev_cells = row.cells;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace swe
