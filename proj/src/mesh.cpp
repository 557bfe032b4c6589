#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "error.hpp"

namespace swe {

namespace {

// Barycentric slack for point-in-cell decisions.
constexpr double kBaryTol = 1e-12;

std::string edge_name(int a, int b) {
  std::ostringstream os;
  os << "edge between vertices " << a << " and " << b;
  return os.str();
}

}  // namespace

Mesh build_connectivity(const TriangleSoup& soup) {
  const int nv = static_cast<int>(soup.points.size());
  const int nt = static_cast<int>(soup.triangles.size());
  if (nt == 0) fail(ErrorCode::mesh, "triangulation contains no triangles");
  if (nv < 3) fail(ErrorCode::mesh, "triangulation has fewer than 3 vertices");

  Mesh mesh;
  mesh.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) mesh.vertices[v].pos = soup.points[v];

  mesh.cells.resize(nt);
  for (int t = 0; t < nt; ++t) {
    std::array<int, 3> tri = soup.triangles[t];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= nv) {
        std::ostringstream os;
        os << "triangle " << t << " references vertex " << tri[k]
           << " outside [0," << nv << ")";
        fail(ErrorCode::mesh, os.str());
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      std::ostringstream os;
      os << "triangle " << t << " repeats a vertex";
      fail(ErrorCode::mesh, os.str());
    }
    const Vec2 a = soup.points[tri[0]];
    const Vec2 b = soup.points[tri[1]];
    const Vec2 c = soup.points[tri[2]];
    double signed_area = 0.5 * cross(b - a, c - a);
    if (signed_area < 0.0) {  // rewind to counterclockwise
      std::swap(tri[1], tri[2]);
      signed_area = -signed_area;
    }
    if (!(signed_area > 0.0)) {
      std::ostringstream os;
      os << "triangle " << t << " is degenerate (zero area)";
      fail(ErrorCode::mesh, os.str());
    }
    Cell& cell = mesh.cells[t];
    cell.vertex = tri;
    cell.area = signed_area;
    cell.centroid = (soup.points[tri[0]] + soup.points[tri[1]] +
                     soup.points[tri[2]]) / 3.0;
  }

  // Deduplicate edges by sorted vertex pair. The first cell to register an
  // edge becomes its left cell and fixes the endpoint order; a second
  // counterclockwise cell necessarily traverses the pair the other way.
  std::unordered_map<std::uint64_t, int> edge_of_pair;
  edge_of_pair.reserve(static_cast<std::size_t>(nt) * 3 / 2 + 8);
  auto pair_key = [nv](int a, int b) {
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return lo * static_cast<std::uint64_t>(nv) + hi;
  };

  for (int t = 0; t < nt; ++t) {
    Cell& cell = mesh.cells[t];
    for (int k = 0; k < 3; ++k) {
      const int a = cell.vertex[(k + 1) % 3];
      const int b = cell.vertex[(k + 2) % 3];
      const auto key = pair_key(a, b);
      auto it = edge_of_pair.find(key);
      if (it == edge_of_pair.end()) {
        Edge edge;
        edge.first = a;
        edge.second = b;
        edge.left = t;
        const Vec2 pa = mesh.vertices[a].pos;
        const Vec2 pb = mesh.vertices[b].pos;
        edge.length = dist(pa, pb);
        if (!(edge.length > 0.0)) {
          fail(ErrorCode::mesh, "degenerate " + edge_name(a, b) +
                                    " (coincident endpoints)");
        }
        edge.normal = rotate_cw(pb - pa) / edge.length;
        edge.midpoint = 0.5 * (pa + pb);
        const int id = static_cast<int>(mesh.edges.size());
        mesh.edges.push_back(edge);
        edge_of_pair.emplace(key, id);
        cell.edge[k] = id;
      } else {
        Edge& edge = mesh.edges[it->second];
        if (edge.right >= 0) {
          fail(ErrorCode::mesh,
               "non-manifold " + edge_name(a, b) + " (third incident cell)");
        }
        if (edge.first == a && edge.second == b) {
          fail(ErrorCode::mesh, "inconsistent orientation across " +
                                    edge_name(a, b) +
                                    " (overlapping triangles)");
        }
        edge.right = t;
        cell.edge[k] = it->second;
      }
    }
  }

  mesh.diamonds.resize(mesh.edges.size());
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Edge& edge = mesh.edges[e];
    if (edge.right < 0) {
      mesh.boundary_edges.push_back(static_cast<int>(e));
      continue;
    }
    ++mesh.n_interior_edges;
    const Vec2 lc = mesh.cells[edge.left].centroid;
    const Vec2 rc = mesh.cells[edge.right].centroid;
    const Vec2 s = mesh.vertices[edge.first].pos;
    const Vec2 n = mesh.vertices[edge.second].pos;
    Diamond& dia = mesh.diamonds[e];
    dia.lr_length = dist(lc, rc);
    dia.lr_normal = rotate_cw(rc - lc) / dia.lr_length;
    // Shoelace area of the quadrilateral (first, right, second, left),
    // which is counterclockwise by construction of the edge orientation.
    dia.area = 0.5 * (cross(s, rc) + cross(rc, n) + cross(n, lc) +
                      cross(lc, s));
    if (!(dia.area > 1e-14 * edge.length * edge.length)) {
      fail(ErrorCode::mesh,
           "degenerate diamond cell around " +
               edge_name(edge.first, edge.second));
    }
  }

  // Boundary tags: match tagged segments to existing edges by vertex pair.
  for (const auto& seg : soup.tagged_segments) {
    if (seg[0] < 0 || seg[0] >= nv || seg[1] < 0 || seg[1] >= nv) continue;
    auto it = edge_of_pair.find(pair_key(seg[0], seg[1]));
    if (it != edge_of_pair.end()) mesh.edges[it->second].tag = seg[2];
  }

  // Vertex -> cell adjacency (CSR) with normalized inverse-distance weights.
  mesh.vertex_cell_offset.assign(nv + 1, 0);
  for (const Cell& cell : mesh.cells)
    for (int v : cell.vertex) ++mesh.vertex_cell_offset[v + 1];
  for (int v = 0; v < nv; ++v)
    mesh.vertex_cell_offset[v + 1] += mesh.vertex_cell_offset[v];
  mesh.vertex_cell_ids.resize(mesh.vertex_cell_offset[nv]);
  mesh.vertex_cell_weights.resize(mesh.vertex_cell_offset[nv]);
  {
    std::vector<int> cursor(mesh.vertex_cell_offset.begin(),
                            mesh.vertex_cell_offset.end() - 1);
    for (int t = 0; t < nt; ++t)
      for (int v : mesh.cells[t].vertex)
        mesh.vertex_cell_ids[cursor[v]++] = t;
  }
  for (int v = 0; v < nv; ++v) {
    const int begin = mesh.vertex_cell_offset[v];
    const int end = mesh.vertex_cell_offset[v + 1];
    double total = 0.0;
    for (int k = begin; k < end; ++k) {
      const double d =
          dist(mesh.vertices[v].pos, mesh.cells[mesh.vertex_cell_ids[k]].centroid);
      mesh.vertex_cell_weights[k] = 1.0 / std::max(d, 1e-12);
      total += mesh.vertex_cell_weights[k];
    }
    for (int k = begin; k < end; ++k) mesh.vertex_cell_weights[k] /= total;
  }

  mesh.bbox_min = {std::numeric_limits<double>::max(),
                   std::numeric_limits<double>::max()};
  mesh.bbox_max = {-std::numeric_limits<double>::max(),
                   -std::numeric_limits<double>::max()};
  for (const Vertex& v : mesh.vertices) {
    mesh.bbox_min.x = std::min(mesh.bbox_min.x, v.pos.x);
    mesh.bbox_min.y = std::min(mesh.bbox_min.y, v.pos.y);
    mesh.bbox_max.x = std::max(mesh.bbox_max.x, v.pos.x);
    mesh.bbox_max.y = std::max(mesh.bbox_max.y, v.pos.y);
  }

  return mesh;
}

TriangleSoup rect_triangulation(double x0, double x1, double y0, double y1,
                                int nx, int ny, DiagonalPattern split) {
  if (!(x1 > x0) || !(y1 > y0))
    fail(ErrorCode::invalid_argument, "rectangle extents must be increasing");
  if (nx < 1 || ny < 1)
    fail(ErrorCode::invalid_argument, "subdivision counts must be positive");

  TriangleSoup soup;
  soup.points.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  const double lx = x1 - x0;
  const double ly = y1 - y0;
  for (int j = 0; j <= ny; ++j) {
    const double y = (j == ny) ? y1 : y0 + (j * ly) / ny;
    for (int i = 0; i <= nx; ++i) {
      const double x = (i == nx) ? x1 : x0 + (i * lx) / nx;
      soup.points.push_back({x, y});
    }
  }

  auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
  soup.triangles.reserve(static_cast<std::size_t>(nx) * ny * 2);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = vid(i, j);
      const int v10 = vid(i + 1, j);
      const int v11 = vid(i + 1, j + 1);
      const int v01 = vid(i, j + 1);
      const bool main_diag =
          split == DiagonalPattern::fixed || ((i + j) % 2 == 0);
      if (main_diag) {
        soup.triangles.push_back({v00, v10, v11});
        soup.triangles.push_back({v00, v11, v01});
      } else {
        soup.triangles.push_back({v00, v10, v01});
        soup.triangles.push_back({v10, v11, v01});
      }
    }
  }
  return soup;
}

Mesh generate_rect_mesh(double x0, double x1, double y0, double y1, int nx,
                        int ny, DiagonalPattern split) {
  return build_connectivity(rect_triangulation(x0, x1, y0, y1, nx, ny, split));
}

std::array<double, 3> barycentric_coords(const Mesh& mesh, int cell_id,
                                         Vec2 p) {
  const Cell& cell = mesh.cells[cell_id];
  const Vec2 a = mesh.vertices[cell.vertex[0]].pos;
  const Vec2 b = mesh.vertices[cell.vertex[1]].pos;
  const Vec2 c = mesh.vertices[cell.vertex[2]].pos;
  const double denom = cross(b - a, c - a);  // 2 * area, positive
  return {cross(b - p, c - p) / denom, cross(c - p, a - p) / denom,
          cross(a - p, b - p) / denom};
}

namespace {

bool contains(const Mesh& mesh, int cell_id, Vec2 p) {
  const auto bc = barycentric_coords(mesh, cell_id, p);
  return bc[0] >= -kBaryTol && bc[1] >= -kBaryTol && bc[2] >= -kBaryTol;
}

// Lowest-indexed cell among `cell_id` and its neighbors across edges the
// point touches, so that shared-edge points resolve deterministically.
int resolve_ties(const Mesh& mesh, int cell_id, Vec2 p) {
  const auto bc = barycentric_coords(mesh, cell_id, p);
  int best = cell_id;
  for (int k = 0; k < 3; ++k) {
    if (bc[k] > kBaryTol) continue;  // not on the edge opposite vertex k
    const Edge& edge = mesh.edges[mesh.cells[cell_id].edge[k]];
    const int other = (edge.left == cell_id) ? edge.right : edge.left;
    if (other >= 0 && other < best && contains(mesh, other, p)) best = other;
  }
  return best;
}

}  // namespace

std::optional<int> locate_point(const Mesh& mesh, Vec2 p, int hint) {
  const double diag = dist(mesh.bbox_min, mesh.bbox_max);
  const double margin = 1e-12 * std::max(1.0, diag);
  if (p.x < mesh.bbox_min.x - margin || p.x > mesh.bbox_max.x + margin ||
      p.y < mesh.bbox_min.y - margin || p.y > mesh.bbox_max.y + margin)
    return std::nullopt;

  const int nc = static_cast<int>(mesh.cells.size());
  int cur = std::clamp(hint, 0, nc - 1);
  for (int steps = 0; steps < nc; ++steps) {
    const auto bc = barycentric_coords(mesh, cur, p);
    int k_min = 0;
    for (int k = 1; k < 3; ++k)
      if (bc[k] < bc[k_min]) k_min = k;
    if (bc[k_min] >= -kBaryTol) return resolve_ties(mesh, cur, p);
    const Edge& edge = mesh.edges[mesh.cells[cur].edge[k_min]];
    const int next = (edge.left == cur) ? edge.right : edge.left;
    if (next < 0) break;  // walk blocked at the boundary
    cur = next;
  }

  // Fallback scan; first hit is the lowest-indexed containing cell.
  for (int c = 0; c < nc; ++c)
    if (contains(mesh, c, p)) return c;
  return std::nullopt;
}

Vec2 diamond_gradient(const Mesh& mesh, int edge_id, double u_left,
                      double u_right, double u_first, double u_second) {
  if (edge_id < 0 || edge_id >= static_cast<int>(mesh.edges.size()))
    fail(ErrorCode::invalid_argument, "edge id out of range");
  if (!mesh.is_interior(edge_id))
    fail(ErrorCode::invalid_argument,
         "diamond gradient is defined on interior edges only");
  const Edge& edge = mesh.edges[edge_id];
  const Diamond& dia = mesh.diamonds[edge_id];
  const Vec2 numerator =
      (u_first - u_second) * dia.lr_length * dia.lr_normal +
      (u_right - u_left) * edge.length * edge.normal;
  return numerator / (2.0 * dia.area);
}

std::vector<double> vertex_values(const Mesh& mesh,
                                  std::span<const double> cell_values) {
  if (cell_values.size() != mesh.cells.size())
    fail(ErrorCode::invalid_argument,
         "cell value array does not match cell count");
  const int nv = static_cast<int>(mesh.vertices.size());
  std::vector<double> out(nv, 0.0);
  for (int v = 0; v < nv; ++v) {
    double acc = 0.0;
    for (int k = mesh.vertex_cell_offset[v]; k < mesh.vertex_cell_offset[v + 1];
         ++k)
      acc += mesh.vertex_cell_weights[k] * cell_values[mesh.vertex_cell_ids[k]];
    out[v] = acc;
  }
  return out;
}

}  // namespace swe
