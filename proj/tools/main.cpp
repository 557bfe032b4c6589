// Command-line front end: thin wrapper over the public C API.
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swefvc/swefvc.h"

namespace {

struct KeyValue {
  std::string key;
  std::string value;
};

// Registers a pass-through option that records "key = value" settings in
// parse order.
void add_setting(CLI::App* cmd, std::vector<KeyValue>& settings,
                 const std::string& flag, const std::string& key,
                 const std::string& desc) {
  cmd->add_option_function<std::string>(
      flag,
      [&settings, key](const std::string& v) {
        settings.push_back({key, v});
      },
      desc);
}

int fail_with_last_error(const char* what) {
  std::fprintf(stderr, "error: %s: %s\n", what, swe_last_error());
  return 1;
}

using ConfigPtr = std::unique_ptr<swe_config, decltype(&swe_config_free)>;

// Builds a config from an optional file plus CLI settings (CLI wins).
int build_config(const std::string& config_file,
                 const std::vector<KeyValue>& settings, ConfigPtr& out) {
  out.reset(swe_config_new());
  if (!config_file.empty() &&
      swe_config_load_file(out.get(), config_file.c_str()) != SWE_OK)
    return fail_with_last_error("loading config");
  for (const KeyValue& kv : settings)
    if (swe_config_set(out.get(), kv.key.c_str(), kv.value.c_str()) != SWE_OK)
      return fail_with_last_error("applying settings");
  return 0;
}

void add_common_settings(CLI::App* cmd, std::vector<KeyValue>& settings) {
  add_setting(cmd, settings, "--case", "case",
              "accuracy_dam, circular_dam, partial_dam or from_file");
  add_setting(cmd, settings, "--cfl", "cfl", "Courant number in (0, 1]");
  add_setting(cmd, settings, "--alpha", "alpha",
              "characteristic step strength");
  add_setting(cmd, settings, "--g", "g", "gravity (m/s^2)");
  add_setting(cmd, settings, "--fc", "fc", "Coriolis parameter (1/s)");
  add_setting(cmd, settings, "--tend", "t_end", "end time (s)");
  add_setting(cmd, settings, "--mesh", "mesh_file", "Gmsh MSH 2.2 file");
  add_setting(cmd, settings, "--nx", "nx", "generated mesh columns");
  add_setting(cmd, settings, "--ny", "ny", "generated mesh rows");
  add_setting(cmd, settings, "--split", "split",
              "diagonal pattern: fixed or alternating");
  add_setting(cmd, settings, "--bc", "bc",
              "default boundary: wall or transmissive");
  add_setting(cmd, settings, "--bc-tags", "bc_tags",
              "per-tag boundaries, e.g. 1:wall,2:transmissive");
  add_setting(cmd, settings, "--x0", "x0", "planar dam position (m)");
  add_setting(cmd, settings, "--h-left", "h_left", "upstream depth (m)");
  add_setting(cmd, settings, "--h-right", "h_right", "downstream depth (m)");
  add_setting(cmd, settings, "--interpolation", "interpolation",
              "centroid-line, barycentric or nearest");
  add_setting(cmd, settings, "--entropy-delta", "entropy_fix_delta",
              "entropy fix threshold or 'auto'");
}

int cmd_run(const std::string& config_file,
            const std::vector<KeyValue>& settings) {
  ConfigPtr cfg(nullptr, swe_config_free);
  if (int rc = build_config(config_file, settings, cfg)) return rc;

  swe_result* result = nullptr;
  if (swe_run(cfg.get(), &result) != SWE_OK)
    return fail_with_last_error("run failed");
  std::unique_ptr<swe_result, decltype(&swe_result_free)> guard(
      result, swe_result_free);

  swe_run_summary s{};
  if (swe_result_get_summary(result, &s) != SWE_OK)
    return fail_with_last_error("reading summary");
  const double rel_mass =
      s.mass_initial != 0.0
          ? (s.mass_final - s.mass_initial) / s.mass_initial
          : 0.0;
  std::printf("cells:            %d\n", s.cells);
  std::printf("steps:            %d\n", s.steps);
  std::printf("final time:       %.17g s\n", s.final_time);
  std::printf("mass:             %.17g -> %.17g (relative change %.3e)\n",
              s.mass_initial, s.mass_final, rel_mass);
  std::printf("depth range:      [%.17g, %.17g] m\n", s.min_depth,
              s.max_depth);
  std::printf("max Froude:       %.17g\n", s.max_froude);
  return 0;
}

int cmd_convergence(const std::string& config_file,
                    const std::vector<KeyValue>& settings,
                    const std::vector<std::string>& schemes,
                    const std::string& csv_path) {
  ConfigPtr cfg(nullptr, swe_config_free);
  // The study defaults to the planar dam break; file/flags may override.
  cfg.reset(swe_config_new());
  swe_config_set(cfg.get(), "case", "accuracy_dam");
  if (!config_file.empty() &&
      swe_config_load_file(cfg.get(), config_file.c_str()) != SWE_OK)
    return fail_with_last_error("loading config");
  for (const KeyValue& kv : settings)
    if (swe_config_set(cfg.get(), kv.key.c_str(), kv.value.c_str()) != SWE_OK)
      return fail_with_last_error("applying settings");
  if (!schemes.empty()) {
    std::string joined;
    for (const std::string& s : schemes) {
      if (!joined.empty()) joined += ",";
      joined += s;
    }
    if (swe_config_set(cfg.get(), "schemes", joined.c_str()) != SWE_OK)
      return fail_with_last_error("applying settings");
  }

  if (swe_convergence_run(cfg.get(), csv_path.c_str()) != SWE_OK)
    return fail_with_last_error("convergence study failed");
  std::printf("wrote %s\n", csv_path.c_str());
  return 0;
}

int cmd_mesh_info(const std::string& mesh_file, double x0, double x1,
                  double y0, double y1, int nx, int ny, bool fixed_split) {
  swe_mesh* mesh = nullptr;
  if (!mesh_file.empty()) {
    if (swe_mesh_load_gmsh(mesh_file.c_str(), &mesh) != SWE_OK)
      return fail_with_last_error("loading mesh");
  } else {
    if (swe_mesh_generate_rect(x0, x1, y0, y1, nx, ny, fixed_split ? 0 : 1,
                               &mesh) != SWE_OK)
      return fail_with_last_error("generating mesh");
  }
  std::unique_ptr<swe_mesh, decltype(&swe_mesh_free)> guard(mesh,
                                                            swe_mesh_free);

  swe_mesh_info info{};
  if (swe_mesh_get_info(mesh, &info) != SWE_OK)
    return fail_with_last_error("reading mesh info");
  std::printf("vertices:         %d\n", info.n_vertices);
  std::printf("cells:            %d\n", info.n_cells);
  std::printf("edges:            %d (%d interior, %d boundary)\n",
              info.n_edges, info.n_interior_edges, info.n_boundary_edges);
  std::printf("total area:       %.17g\n", info.total_area);
  std::printf("cell area range:  [%.17g, %.17g]\n", info.min_cell_area,
              info.max_cell_area);
  std::printf("edge length range:[%.17g, %.17g]\n", info.min_edge_length,
              info.max_edge_length);

  std::vector<int> tags(64);
  const int n_tags =
      swe_mesh_boundary_tags(mesh, tags.data(), static_cast<int>(tags.size()));
  if (n_tags < 0) return fail_with_last_error("reading boundary tags");
  std::printf("boundary tags:    ");
  for (int i = 0; i < n_tags && i < static_cast<int>(tags.size()); ++i)
    std::printf("%s%d", i ? ", " : "", tags[i]);
  std::printf("%s\n", n_tags == 0 ? "(none)" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow water solver on unstructured triangular meshes"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string config_file;
  std::vector<KeyValue> run_settings;
  CLI::App* run = app.add_subcommand("run", "Run a single simulation");
  run->add_option("--config", config_file, "key = value config file");
  add_common_settings(run, run_settings);
  add_setting(run, run_settings, "--scheme", "scheme", "fvc or roe");
  add_setting(run, run_settings, "--out", "out_dir",
              "output directory (VTK frames + diagnostics.csv)");
  add_setting(run, run_settings, "--output-interval", "output_interval",
              "seconds between frames");
  add_setting(run, run_settings, "--output-times", "output_times",
              "comma-separated frame instants");
  add_setting(run, run_settings, "--dam-x-min", "dam_x_min",
              "dam upstream face (m)");
  add_setting(run, run_settings, "--dam-x-max", "dam_x_max",
              "dam downstream face (m)");
  add_setting(run, run_settings, "--breach-y-min", "breach_y_min",
              "breach lower edge (m)");
  add_setting(run, run_settings, "--breach-y-max", "breach_y_max",
              "breach upper edge (m)");

  std::string conv_config_file;
  std::vector<KeyValue> conv_settings;
  std::vector<std::string> conv_schemes;
  std::string csv_path = "convergence.csv";
  CLI::App* conv = app.add_subcommand(
      "convergence", "Mesh-refinement error study (planar dam break)");
  conv->add_option("--config", conv_config_file, "key = value config file");
  add_common_settings(conv, conv_settings);
  conv->add_option("--scheme", conv_schemes,
                   "scheme to include (repeatable): fvc or roe");
  add_setting(conv, conv_settings, "--nx-list", "convergence_nx",
              "comma-separated mesh resolutions");
  conv->add_option("--csv", csv_path, "output table path");

  std::string mesh_file;
  double rx0 = 0.0, rx1 = 1.0, ry0 = 0.0, ry1 = 1.0;
  int mnx = 8, mny = 0;
  bool fixed_split = false;
  CLI::App* minfo =
      app.add_subcommand("mesh-info", "Print mesh statistics and tags");
  minfo->add_option("mesh", mesh_file, "Gmsh MSH 2.2 file");
  minfo->add_option("--x0", rx0, "generated domain x min");
  minfo->add_option("--x1", rx1, "generated domain x max");
  minfo->add_option("--y0", ry0, "generated domain y min");
  minfo->add_option("--y1", ry1, "generated domain y max");
  minfo->add_option("--nx", mnx, "generated mesh columns");
  minfo->add_option("--ny", mny, "generated mesh rows (default nx)");
  minfo->add_flag("--fixed-split", fixed_split,
                  "use one diagonal direction everywhere");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(config_file, run_settings);
  if (conv->parsed())
    return cmd_convergence(conv_config_file, conv_settings, conv_schemes,
                           csv_path);
  if (minfo->parsed())
    return cmd_mesh_info(mesh_file, rx0, rx1, ry0, ry1, mnx,
                         mny > 0 ? mny : mnx, fixed_split);
  return 1;
}
