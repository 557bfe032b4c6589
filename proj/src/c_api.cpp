#include "swefvc/swefvc.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "config.hpp"
#include "driver.hpp"
#include "error.hpp"
#include "gmsh.hpp"
#include "mesh.hpp"
#include "output.hpp"

struct swe_mesh {
  swe::Mesh mesh;
};

struct swe_config {
  swe::ConfigBuilder builder;
};

struct swe_result {
  swe::RunResult result;
};

namespace {

thread_local std::string g_last_error;

swe_status to_status(swe::ErrorCode code) {
  switch (code) {
    case swe::ErrorCode::invalid_argument: return SWE_ERR_INVALID_ARGUMENT;
    case swe::ErrorCode::io: return SWE_ERR_IO;
    case swe::ErrorCode::parse: return SWE_ERR_PARSE;
    case swe::ErrorCode::mesh: return SWE_ERR_MESH;
    case swe::ErrorCode::runtime: return SWE_ERR_RUNTIME;
  }
  return SWE_ERR_RUNTIME;
}

swe_status record_error(swe_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
swe_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SWE_OK;
  } catch (const swe::Error& e) {
    return record_error(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return record_error(SWE_ERR_RUNTIME, e.what());
  } catch (...) {
    return record_error(SWE_ERR_RUNTIME, "unknown failure");
  }
}

}  // namespace

extern "C" {

const char* swe_status_name(swe_status status) {
  switch (status) {
    case SWE_OK: return "ok";
    case SWE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SWE_ERR_IO: return "i/o error";
    case SWE_ERR_PARSE: return "parse error";
    case SWE_ERR_MESH: return "mesh error";
    case SWE_ERR_RUNTIME: return "runtime error";
  }
  return "unknown status";
}

const char* swe_last_error(void) { return g_last_error.c_str(); }

swe_status swe_mesh_load_gmsh(const char* path, swe_mesh** out_mesh) {
  if (!path || !out_mesh)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  *out_mesh = nullptr;
  return guarded([&] {
    auto* handle = new swe_mesh{swe::load_gmsh(path)};
    *out_mesh = handle;
  });
}

swe_status swe_mesh_generate_rect(double x_min, double x_max, double y_min,
                                  double y_max, int nx, int ny,
                                  int alternating_split, swe_mesh** out_mesh) {
  if (!out_mesh)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  *out_mesh = nullptr;
  return guarded([&] {
    const auto split = alternating_split ? swe::DiagonalPattern::alternating
                                         : swe::DiagonalPattern::fixed;
    auto* handle = new swe_mesh{
        swe::generate_rect_mesh(x_min, x_max, y_min, y_max, nx, ny, split)};
    *out_mesh = handle;
  });
}

void swe_mesh_free(swe_mesh* mesh) { delete mesh; }

swe_status swe_mesh_get_info(const swe_mesh* mesh, swe_mesh_info* out_info) {
  if (!mesh || !out_info)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const swe::Mesh& m = mesh->mesh;
    swe_mesh_info info{};
    info.n_vertices = static_cast<int>(m.vertices.size());
    info.n_cells = static_cast<int>(m.cells.size());
    info.n_edges = static_cast<int>(m.edges.size());
    info.n_interior_edges = m.n_interior_edges;
    info.n_boundary_edges = static_cast<int>(m.boundary_edges.size());
    double total = 0.0;
    double amin = m.cells.empty() ? 0.0 : m.cells[0].area;
    double amax = amin;
    for (const swe::Cell& cell : m.cells) {
      total += cell.area;
      amin = std::min(amin, cell.area);
      amax = std::max(amax, cell.area);
    }
    info.total_area = total;
    info.min_cell_area = amin;
    info.max_cell_area = amax;
    double emin = m.edges.empty() ? 0.0 : m.edges[0].length;
    double emax = emin;
    for (const swe::Edge& edge : m.edges) {
      emin = std::min(emin, edge.length);
      emax = std::max(emax, edge.length);
    }
    info.min_edge_length = emin;
    info.max_edge_length = emax;
    *out_info = info;
  });
}

int swe_mesh_boundary_tags(const swe_mesh* mesh, int* tags, int capacity) {
  if (!mesh || (capacity > 0 && !tags)) {
    record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
    return -1;
  }
  std::set<int> distinct;
  for (int e : mesh->mesh.boundary_edges)
    distinct.insert(mesh->mesh.edges[e].tag);
  int i = 0;
  for (int tag : distinct) {
    if (i >= capacity) break;
    tags[i++] = tag;
  }
  return static_cast<int>(distinct.size());
}

swe_config* swe_config_new(void) { return new swe_config{}; }

void swe_config_free(swe_config* config) { delete config; }

swe_status swe_config_load_file(swe_config* config, const char* path) {
  if (!config || !path)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { config->builder.load_file(path); });
}

swe_status swe_config_set(swe_config* config, const char* key,
                          const char* value) {
  if (!config || !key || !value)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { config->builder.set(key, value); });
}

swe_status swe_run(const swe_config* config, swe_result** out_result) {
  if (!config || !out_result)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  *out_result = nullptr;
  return guarded([&] {
    swe::RunResult result = swe::run(config->builder.finish());
    *out_result = new swe_result{std::move(result)};
  });
}

void swe_result_free(swe_result* result) { delete result; }

swe_status swe_result_get_summary(const swe_result* result,
                                  swe_run_summary* out_summary) {
  if (!result || !out_summary)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  const swe::Diagnostics& d = result->result.diagnostics;
  swe_run_summary s{};
  s.final_time = result->result.field.time;
  s.steps = d.step.empty() ? 0 : d.step.back();
  s.cells = static_cast<int>(result->result.field.cells.size());
  s.mass_initial = d.mass.empty() ? 0.0 : d.mass.front();
  s.mass_final = d.mass.empty() ? 0.0 : d.mass.back();
  s.min_depth =
      d.min_depth.empty()
          ? 0.0
          : *std::min_element(d.min_depth.begin(), d.min_depth.end());
  s.max_depth =
      d.max_depth.empty()
          ? 0.0
          : *std::max_element(d.max_depth.begin(), d.max_depth.end());
  s.max_froude =
      d.max_froude.empty()
          ? 0.0
          : *std::max_element(d.max_froude.begin(), d.max_froude.end());
  *out_summary = s;
  return SWE_OK;
}

swe_status swe_result_cell_depths(const swe_result* result, double* out,
                                  int capacity) {
  if (!result || !out)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  const auto& cells = result->result.field.cells;
  if (capacity < static_cast<int>(cells.size()))
    return record_error(SWE_ERR_INVALID_ARGUMENT,
                        "buffer smaller than cell count");
  for (std::size_t c = 0; c < cells.size(); ++c) out[c] = cells[c].h;
  return SWE_OK;
}

swe_status swe_convergence_run(const swe_config* config,
                               const char* csv_path) {
  if (!config || !csv_path)
    return record_error(SWE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto rows = swe::convergence_study(config->builder.finish());
    swe::write_convergence_csv(rows, csv_path);
  });
}

}  // extern "C"
