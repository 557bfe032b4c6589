#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace swe {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

OutputFrame make_frame(const Mesh& mesh, const ConservedField& field,
                       const PhysParams& params) {
  OutputFrame frame;
  frame.time = field.time;
  const std::size_t nc = mesh.cells.size();
  frame.h.resize(nc);
  frame.u.resize(nc);
  frame.v.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const Primitive p = to_primitive(field.cells[c]);
    frame.h[c] = p.h;
    frame.u[c] = p.u;
    frame.v[c] = p.v;
  }
  frame.froude = froude_field(field, params);
  return frame;
}

void write_vtk(const Mesh& mesh, const OutputFrame& frame,
               const std::string& path) {
  const std::size_t nc = mesh.cells.size();
  if (frame.h.size() != nc || frame.u.size() != nc || frame.v.size() != nc ||
      frame.froude.size() != nc)
    fail(ErrorCode::invalid_argument, "frame arrays do not match cell count");

  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");

  out << "# vtk DataFile Version 3.0\n";
  out << "shallow water fields at t=" << g17(frame.time) << "\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";

  out << "POINTS " << mesh.vertices.size() << " double\n";
  for (const Vertex& v : mesh.vertices)
    out << g17(v.pos.x) << " " << g17(v.pos.y) << " 0\n";

  out << "CELLS " << nc << " " << nc * 4 << "\n";
  for (const Cell& cell : mesh.cells)
    out << "3 " << cell.vertex[0] << " " << cell.vertex[1] << " "
        << cell.vertex[2] << "\n";

  out << "CELL_TYPES " << nc << "\n";
  for (std::size_t c = 0; c < nc; ++c) out << "5\n";

  out << "CELL_DATA " << nc << "\n";
  out << "SCALARS h double 1\nLOOKUP_TABLE default\n";
  for (double v : frame.h) out << g17(v) << "\n";
  out << "SCALARS froude double 1\nLOOKUP_TABLE default\n";
  for (double v : frame.froude) out << g17(v) << "\n";
  out << "VECTORS velocity double\n";
  for (std::size_t c = 0; c < nc; ++c)
    out << g17(frame.u[c]) << " " << g17(frame.v[c]) << " 0\n";

  out.flush();
  if (!out) fail(ErrorCode::io, "failed while writing '" + path + "'");
}

DiagnosticsWriter::DiagnosticsWriter(const std::string& path) : path_(path) {
  out_.open(path);
  if (!out_) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out_ << "step,time,dt,mass,momentum_x,momentum_y,min_depth,max_depth,"
          "max_froude\n";
  out_.flush();
}

void DiagnosticsWriter::row(int step, double time, double dt, double mass,
                            double momentum_x, double momentum_y,
                            double min_depth, double max_depth,
                            double max_froude) {
  out_ << step << "," << g17(time) << "," << g17(dt) << "," << g17(mass)
       << "," << g17(momentum_x) << "," << g17(momentum_y) << ","
       << g17(min_depth) << "," << g17(max_depth) << "," << g17(max_froude)
       << "\n";
  out_.flush();
  if (!out_) fail(ErrorCode::io, "failed while writing '" + path_ + "'");
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << "scheme,cells,l1_error,observed_order\n";
  for (const ConvergenceRow& row : rows) {
    out << scheme_name(row.scheme) << "," << row.cells << ","
        << g17(row.l1_error) << ",";
    if (std::isfinite(row.observed_order)) out << g17(row.observed_order);
    out << "\n";
  }
  out.flush();
  if (!out) fail(ErrorCode::io, "failed while writing '" + path + "'");
}

}  // namespace swe
