/* Public C interface of the shallow water solver.
 *
 * All entry points return swe_status (except the trivial accessors); on
 * failure swe_last_error() describes the problem for the calling thread.
 * Objects are created and destroyed through matching *_new/_load and *_free
 * calls and are never shared between handles.
 */
#ifndef SWEFVC_H
#define SWEFVC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swe_status {
  SWE_OK = 0,
  SWE_ERR_INVALID_ARGUMENT = 1,
  SWE_ERR_IO = 2,
  SWE_ERR_PARSE = 3,
  SWE_ERR_MESH = 4,
  SWE_ERR_RUNTIME = 5
} swe_status;

typedef struct swe_mesh swe_mesh;
typedef struct swe_config swe_config;
typedef struct swe_result swe_result;

/* Short name of a status code, e.g. "ok" or "parse error". */
const char* swe_status_name(swe_status status);

/* Message of the last failure on this thread; empty string if none. */
const char* swe_last_error(void);

/* ----- meshes ----- */

/* Loads a Gmsh MSH 2.2 ASCII file. */
swe_status swe_mesh_load_gmsh(const char* path, swe_mesh** out_mesh);

/* Structured triangulation of [x_min,x_max] x [y_min,y_max] with nx*ny
 * quads split into triangles; alternating_split != 0 checkerboards the
 * diagonals. */
swe_status swe_mesh_generate_rect(double x_min, double x_max, double y_min,
                                  double y_max, int nx, int ny,
                                  int alternating_split, swe_mesh** out_mesh);

void swe_mesh_free(swe_mesh* mesh);

typedef struct swe_mesh_info {
  int n_vertices;
  int n_cells;
  int n_edges;
  int n_interior_edges;
  int n_boundary_edges;
  double total_area;
  double min_cell_area;
  double max_cell_area;
  double min_edge_length;
  double max_edge_length;
} swe_mesh_info;

swe_status swe_mesh_get_info(const swe_mesh* mesh, swe_mesh_info* out_info);

/* Distinct boundary tags in ascending order. Returns the total count and
 * copies at most `capacity` tags; negative on error. */
int swe_mesh_boundary_tags(const swe_mesh* mesh, int* tags, int capacity);

/* ----- configuration ----- */

swe_config* swe_config_new(void);
void swe_config_free(swe_config* config);

/* Applies "key = value" lines from a file. */
swe_status swe_config_load_file(swe_config* config, const char* path);

/* Sets one key (same keys as the config file), e.g. ("case",
 * "circular_dam") or ("cfl", "0.8"). */
swe_status swe_config_set(swe_config* config, const char* key,
                          const char* value);

/* ----- simulations ----- */

swe_status swe_run(const swe_config* config, swe_result** out_result);
void swe_result_free(swe_result* result);

typedef struct swe_run_summary {
  double final_time;
  int steps;
  int cells;
  double mass_initial;
  double mass_final;
  double min_depth;  /* over the whole run */
  double max_depth;  /* over the whole run */
  double max_froude; /* over the whole run */
} swe_run_summary;

swe_status swe_result_get_summary(const swe_result* result,
                                  swe_run_summary* out_summary);

/* Copies the final per-cell depths; capacity must be >= the cell count. */
swe_status swe_result_cell_depths(const swe_result* result, double* out,
                                  int capacity);

/* Runs the configured mesh-refinement study and writes the CSV table
 * (columns scheme, cells, l1_error, observed_order) to csv_path. */
swe_status swe_convergence_run(const swe_config* config,
                               const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* SWEFVC_H */
