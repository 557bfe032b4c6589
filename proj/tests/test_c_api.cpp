// Exercises the shared-library interface exactly as an external C caller
// would: through swefvc.h only, never through internal headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "swefvc/swefvc.h"

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// Unit square with two triangles; bottom/right boundary tagged 7, the rest 9.
const char* kTaggedSquare = R"($MeshFormat
2.2 0 8
$EndMeshFormat
$Nodes
4
1 0 0 0
2 1 0 0
3 1 1 0
4 0 1 0
$EndNodes
$Elements
6
1 1 2 7 1 1 2
2 1 2 7 1 2 3
3 1 2 9 1 3 4
4 1 2 9 1 4 1
5 2 2 1 1 1 2 3
6 2 2 1 1 1 3 4
$EndElements
)";

struct ConfigHandle {
  swe_config* ptr = swe_config_new();
  ~ConfigHandle() { swe_config_free(ptr); }
};

void set_or_die(swe_config* cfg, const char* key, const char* value) {
  REQUIRE(swe_config_set(cfg, key, value) == SWE_OK);
}

}  // namespace

TEST_CASE("status codes have stable names") {
  CHECK(std::strcmp(swe_status_name(SWE_OK), "ok") == 0);
  CHECK(std::strcmp(swe_status_name(SWE_ERR_INVALID_ARGUMENT),
                    "invalid argument") == 0);
  CHECK(std::strcmp(swe_status_name(SWE_ERR_IO), "i/o error") == 0);
  CHECK(std::strcmp(swe_status_name(SWE_ERR_PARSE), "parse error") == 0);
  CHECK(std::strcmp(swe_status_name(SWE_ERR_MESH), "mesh error") == 0);
  CHECK(std::strcmp(swe_status_name(SWE_ERR_RUNTIME), "runtime error") == 0);
  CHECK(std::strcmp(swe_status_name(static_cast<swe_status>(99)),
                    "unknown status") == 0);
}

TEST_CASE("null arguments are rejected up front") {
  swe_mesh* mesh = nullptr;
  CHECK(swe_mesh_load_gmsh(nullptr, &mesh) == SWE_ERR_INVALID_ARGUMENT);
  CHECK(std::strcmp(swe_last_error(), "null argument") == 0);
  CHECK(swe_mesh_load_gmsh("x.msh", nullptr) == SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_mesh_generate_rect(0, 1, 0, 1, 2, 2, 1, nullptr) ==
        SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_mesh_get_info(nullptr, nullptr) == SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_mesh_boundary_tags(nullptr, nullptr, 0) == -1);
  CHECK(swe_config_set(nullptr, "cfl", "0.5") == SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_config_load_file(nullptr, "x.cfg") == SWE_ERR_INVALID_ARGUMENT);
  swe_result* result = nullptr;
  CHECK(swe_run(nullptr, &result) == SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_result_get_summary(nullptr, nullptr) ==
        SWE_ERR_INVALID_ARGUMENT);
  CHECK(swe_convergence_run(nullptr, "x.csv") == SWE_ERR_INVALID_ARGUMENT);

  // Freeing null handles is a no-op, not a crash.
  swe_mesh_free(nullptr);
  swe_config_free(nullptr);
  swe_result_free(nullptr);
}

TEST_CASE("generated rectangles report their geometry") {
  swe_mesh* mesh = nullptr;
  REQUIRE(swe_mesh_generate_rect(0, 1, 0, 1, 4, 4, 1, &mesh) == SWE_OK);
  REQUIRE(mesh != nullptr);
  CHECK(std::strcmp(swe_last_error(), "") == 0);  // success clears the slot

  swe_mesh_info info;
  REQUIRE(swe_mesh_get_info(mesh, &info) == SWE_OK);
  CHECK(info.n_vertices == 25);
  CHECK(info.n_cells == 32);
  CHECK(info.n_edges == 56);
  CHECK(info.n_interior_edges == 40);
  CHECK(info.n_boundary_edges == 16);
  CHECK(info.total_area == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(info.min_cell_area == doctest::Approx(0.03125).epsilon(1e-13));
  CHECK(info.max_cell_area == doctest::Approx(0.03125).epsilon(1e-13));
  CHECK(info.min_edge_length == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(info.max_edge_length ==
        doctest::Approx(0.25 * std::sqrt(2.0)).epsilon(1e-13));

  // Generated meshes are untagged: one distinct tag, 0.
  int tags[4] = {-7, -7, -7, -7};
  CHECK(swe_mesh_boundary_tags(mesh, tags, 4) == 1);
  CHECK(tags[0] == 0);
  CHECK(tags[1] == -7);
  CHECK(swe_mesh_boundary_tags(mesh, nullptr, 0) == 1);  // count-only query

  swe_mesh_free(mesh);
}

TEST_CASE("degenerate rectangle requests fail cleanly") {
  swe_mesh* mesh = reinterpret_cast<swe_mesh*>(0x1);
  CHECK(swe_mesh_generate_rect(0, 1, 0, 1, 0, 4, 1, &mesh) ==
        SWE_ERR_INVALID_ARGUMENT);
  CHECK(mesh == nullptr);  // the out pointer is reset on failure
  CHECK(std::string(swe_last_error()).find("subdivision counts") !=
        std::string::npos);
}

TEST_CASE("mesh files load with their boundary tags") {
  const std::string path = temp_path("swe_capi_square.msh");
  {
    std::ofstream out(path);
    out << kTaggedSquare;
  }

  swe_mesh* mesh = nullptr;
  REQUIRE(swe_mesh_load_gmsh(path.c_str(), &mesh) == SWE_OK);
  swe_mesh_info info;
  REQUIRE(swe_mesh_get_info(mesh, &info) == SWE_OK);
  CHECK(info.n_cells == 2);
  CHECK(info.n_vertices == 4);
  CHECK(info.n_boundary_edges == 4);

  int tags[8] = {0};
  CHECK(swe_mesh_boundary_tags(mesh, tags, 8) == 2);
  CHECK(tags[0] == 7);
  CHECK(tags[1] == 9);
  // A too-small buffer still reports the total count.
  int one = 0;
  CHECK(swe_mesh_boundary_tags(mesh, &one, 1) == 2);
  CHECK(one == 7);

  swe_mesh_free(mesh);
  std::remove(path.c_str());

  swe_mesh* missing = nullptr;
  CHECK(swe_mesh_load_gmsh("/nonexistent_swe_capi.msh", &missing) ==
        SWE_ERR_IO);
  CHECK(missing == nullptr);
  CHECK(std::strlen(swe_last_error()) > 0);
}

TEST_CASE("unreadable mesh formats come back as parse errors") {
  const std::string path = temp_path("swe_capi_bad.msh");
  {
    std::ofstream out(path);
    out << "$MeshFormat\n4.1 0 8\n$EndMeshFormat\n";
  }
  swe_mesh* mesh = nullptr;
  CHECK(swe_mesh_load_gmsh(path.c_str(), &mesh) == SWE_ERR_PARSE);
  CHECK(std::string(swe_last_error()).find("unsupported MSH version") !=
        std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("configured runs produce a coherent summary") {
  ConfigHandle cfg;
  set_or_die(cfg.ptr, "case", "accuracy_dam");
  set_or_die(cfg.ptr, "nx", "8");
  set_or_die(cfg.ptr, "t_end", "0.3");
  set_or_die(cfg.ptr, "cfl", "0.45");

  // Config mistakes surface immediately with the offending key.
  CHECK(swe_config_set(cfg.ptr, "cflx", "1") == SWE_ERR_PARSE);
  CHECK(std::string(swe_last_error()).find("unknown config key") !=
        std::string::npos);

  swe_result* result = nullptr;
  REQUIRE(swe_run(cfg.ptr, &result) == SWE_OK);
  REQUIRE(result != nullptr);

  swe_run_summary s;
  REQUIRE(swe_result_get_summary(result, &s) == SWE_OK);
  CHECK(s.cells == 128);
  CHECK(s.final_time == 0.3);
  CHECK(s.steps >= 1);
  CHECK(s.mass_initial > 0.0);
  CHECK(std::abs(s.mass_final - s.mass_initial) <= 1e-10 * s.mass_initial);
  CHECK(s.min_depth > 0.0);
  CHECK(s.max_depth >= 4.0 - 1e-12);
  CHECK(s.max_froude > 0.0);

  std::vector<double> depths(static_cast<std::size_t>(s.cells), -1.0);
  CHECK(swe_result_cell_depths(result, depths.data(), s.cells - 1) ==
        SWE_ERR_INVALID_ARGUMENT);
  CHECK(std::string(swe_last_error()).find("buffer smaller") !=
        std::string::npos);
  REQUIRE(swe_result_cell_depths(result, depths.data(), s.cells) == SWE_OK);
  for (double h : depths) {
    CHECK(h >= s.min_depth - 1e-12);
    CHECK(h <= s.max_depth + 1e-12);
  }

  swe_result_free(result);
}

TEST_CASE("runs without a case are refused") {
  ConfigHandle cfg;
  set_or_die(cfg.ptr, "cfl", "0.5");
  swe_result* result = nullptr;
  CHECK(swe_run(cfg.ptr, &result) == SWE_ERR_PARSE);
  CHECK(result == nullptr);
  CHECK(std::string(swe_last_error()).find("missing required key 'case'") !=
        std::string::npos);
}

TEST_CASE("config files load through the same keys") {
  const std::string cfg_path = temp_path("swe_capi_test.cfg");
  {
    std::ofstream out(cfg_path);
    out << "case = accuracy_dam\nnx = 8\nt_end = 0\n";
  }
  ConfigHandle cfg;
  REQUIRE(swe_config_load_file(cfg.ptr, cfg_path.c_str()) == SWE_OK);
  swe_result* result = nullptr;
  REQUIRE(swe_run(cfg.ptr, &result) == SWE_OK);
  swe_run_summary s;
  REQUIRE(swe_result_get_summary(result, &s) == SWE_OK);
  CHECK(s.cells == 128);
  CHECK(s.final_time == 0.0);
  CHECK(s.steps == 0);
  swe_result_free(result);
  std::remove(cfg_path.c_str());

  CHECK(swe_config_load_file(cfg.ptr, "/nonexistent_swe.cfg") == SWE_ERR_IO);
}

TEST_CASE("refinement studies write their table through the C surface") {
  ConfigHandle cfg;
  set_or_die(cfg.ptr, "case", "accuracy_dam");
  set_or_die(cfg.ptr, "t_end", "0");
  set_or_die(cfg.ptr, "convergence_nx", "8,12");

  const std::string csv = temp_path("swe_capi_conv.csv");
  REQUIRE(swe_convergence_run(cfg.ptr, csv.c_str()) == SWE_OK);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "scheme,cells,l1_error,observed_order");
  CHECK(lines[1].rfind("fvc,128,", 0) == 0);
  CHECK(lines[2].rfind("fvc,288,", 0) == 0);
  CHECK(lines[3].rfind("roe,128,", 0) == 0);
  CHECK(lines[4].rfind("roe,288,", 0) == 0);
  std::remove(csv.c_str());

  // A bad case for the study: circular domains have no exact reference.
  ConfigHandle bad;
  set_or_die(bad.ptr, "case", "circular_dam");
  set_or_die(bad.ptr, "t_end", "0");
  CHECK(swe_convergence_run(bad.ptr, csv.c_str()) ==
        SWE_ERR_INVALID_ARGUMENT);
}
