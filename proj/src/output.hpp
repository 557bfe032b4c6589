#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "driver.hpp"
#include "mesh.hpp"
#include "state.hpp"

namespace swe {

// Cell fields snapshotted for visualization.
struct OutputFrame {
  double time = 0.0;
  std::vector<double> h, u, v, froude;
};

OutputFrame make_frame(const Mesh& mesh, const ConservedField& field,
                       const PhysParams& params);

// Legacy ASCII VTK unstructured grid with per-cell depth, Froude number and
// velocity. Numbers carry 17 significant digits so depths survive a
// round trip through the file exactly.
void write_vtk(const Mesh& mesh, const OutputFrame& frame,
               const std::string& path);

// Per-step CSV, flushed after every row so aborted runs keep their prefix.
class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::string& path);
  void row(int step, double time, double dt, double mass, double momentum_x,
           double momentum_y, double min_depth, double max_depth,
           double max_froude);

 private:
  std::ofstream out_;
  std::string path_;
};

// Columns: scheme, cells, l1_error, observed_order (blank on the first mesh
// of each scheme).
void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path);

}  // namespace swe
