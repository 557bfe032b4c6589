#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace swe {

struct Vertex {
  Vec2 pos;
};

// Triangle cell. Vertices are stored counterclockwise; edge[k] is the edge
// opposite vertex[k], i.e. the edge joining vertex[(k+1)%3] and
// vertex[(k+2)%3].
struct Cell {
  std::array<int, 3> vertex;
  std::array<int, 3> edge;
  Vec2 centroid;
  double area = 0.0;
};

// Oriented edge. The unit normal points from the left cell to the right cell
// (or out of the domain on boundary edges, where right < 0). Endpoints are
// ordered so that the left cell traverses first -> second while walking its
// own boundary counterclockwise; with the clockwise-quarter-turn normal this
// makes (second - first) a counterclockwise quarter turn of the normal.
struct Edge {
  int first = -1;   // endpoint S of the dual diamond
  int second = -1;  // endpoint N of the dual diamond
  int left = -1;
  int right = -1;
  Vec2 midpoint;
  Vec2 normal;  // unit, left -> right
  double length = 0.0;
  int tag = 0;  // boundary tag from the mesh file; 0 when untagged
};

// Co-volume around an interior edge: the quadrilateral with vertices
// (first endpoint, right centroid, second endpoint, left centroid).
struct Diamond {
  Vec2 lr_normal;        // unit normal of the centroid-to-centroid segment
  double lr_length = 0;  // distance between the two adjacent centroids
  double area = 0;       // quadrilateral area
};

struct Mesh {
  std::vector<Vertex> vertices;
  std::vector<Cell> cells;
  std::vector<Edge> edges;
  std::vector<Diamond> diamonds;  // indexed like edges; valid on interior ones
  std::vector<int> boundary_edges;
  int n_interior_edges = 0;

  // Vertex -> adjacent cells in CSR layout, with normalized inverse-distance
  // weights (vertex to cell centroid) used to lift cell data onto vertices.
  std::vector<int> vertex_cell_offset;
  std::vector<int> vertex_cell_ids;
  std::vector<double> vertex_cell_weights;

  Vec2 bbox_min;
  Vec2 bbox_max;

  bool is_interior(int edge_id) const { return edges[edge_id].right >= 0; }
};

// Raw triangulation before connectivity is derived. Segments carry boundary
// tags (vertex a, vertex b, tag) and are matched to edges by vertex pair.
struct TriangleSoup {
  std::vector<Vec2> points;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 3>> tagged_segments;
};

enum class DiagonalPattern {
  fixed,        // every quad split along the same diagonal
  alternating,  // checkerboard diagonals, mirror-symmetric for even counts
};

// Derives edges, adjacency, diamonds and vertex weights from a triangle
// soup. Fixes clockwise triangles, validates areas and manifoldness.
Mesh build_connectivity(const TriangleSoup& soup);

// Structured triangulation of [x0,x1]x[y0,y1] with nx-by-ny quads, two
// triangles each.
TriangleSoup rect_triangulation(double x0, double x1, double y0, double y1,
                                int nx, int ny, DiagonalPattern split);

Mesh generate_rect_mesh(double x0, double x1, double y0, double y1, int nx,
                        int ny, DiagonalPattern split);

// Cell containing p, or nullopt when p lies outside the mesh. Points on
// shared edges resolve to the lowest-indexed adjacent cell. The search walks
// from `hint` across the edge of the most negative barycentric coordinate
// and falls back to an exhaustive scan if the walk stalls.
std::optional<int> locate_point(const Mesh& mesh, Vec2 p, int hint = 0);

// Barycentric coordinates of p in the given cell, in vertex order.
std::array<double, 3> barycentric_coords(const Mesh& mesh, int cell_id,
                                         Vec2 p);

// Green-Gauss gradient of a scalar over the diamond co-volume of an interior
// edge, from the values at the left/right centroids and the two edge
// endpoints. Exact for affine fields.
Vec2 diamond_gradient(const Mesh& mesh, int edge_id, double u_left,
                      double u_right, double u_first, double u_second);

// Inverse-distance average of cell values at each vertex.
std::vector<double> vertex_values(const Mesh& mesh,
                                  std::span<const double> cell_values);

}  // namespace swe
