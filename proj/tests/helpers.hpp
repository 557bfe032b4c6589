// Shared fixtures for the unit tests: tiny hand-built meshes, deterministic
// random states, and a few norms used across suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "driver.hpp"
#include "mesh.hpp"
#include "state.hpp"

namespace test {

// Unit square split into two triangles along the main diagonal.
inline swe::Mesh two_triangle_square() {
  return swe::generate_rect_mesh(0.0, 1.0, 0.0, 1.0, 1, 1,
                                 swe::DiagonalPattern::fixed);
}

// Two triangles sharing the unit segment (0,0)-(1,0), with apexes far enough
// that every boundary edge is longer than the shared one. The interior edge
// therefore controls the global time step.
inline swe::Mesh kite_mesh() {
  swe::TriangleSoup soup;
  soup.points = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}, {0.5, -1.0}};
  soup.triangles = {{0, 1, 2}, {0, 3, 1}};
  return swe::build_connectivity(soup);
}

// Two triangles whose shared-edge diamond is the unit-diagonal square:
// cell centroids at (-1,0) and (1,0), shared edge from (0,-1) to (0,1).
inline swe::Mesh symmetric_diamond_mesh() {
  swe::TriangleSoup soup;
  soup.points = {{0.0, -1.0}, {0.0, 1.0}, {-3.0, 0.0}, {3.0, 0.0}};
  soup.triangles = {{0, 1, 2}, {0, 3, 1}};
  return swe::build_connectivity(soup);
}

// Rectangle triangulation with interior vertices displaced by a smooth,
// deterministic perturbation, so diamonds are genuinely irregular.
inline swe::Mesh perturbed_rect_mesh(double x0, double x1, double y0,
                                     double y1, int nx, int ny) {
  swe::TriangleSoup soup = swe::rect_triangulation(
      x0, x1, y0, y1, nx, ny, swe::DiagonalPattern::alternating);
  const double hx = (x1 - x0) / nx;
  const double hy = (y1 - y0) / ny;
  for (swe::Vec2& p : soup.points) {
    const bool on_rim = p.x == x0 || p.x == x1 || p.y == y0 || p.y == y1;
    if (on_rim) continue;
    p.x += 0.18 * hx * std::sin(3.0 * p.x + 1.0) * std::cos(2.0 * p.y);
    p.y += 0.18 * hy * std::cos(2.0 * p.x) * std::sin(3.0 * p.y + 2.0);
  }
  return swe::build_connectivity(soup);
}

inline swe::ConservedField uniform_field(std::size_t n, double h, double u,
                                         double v) {
  swe::ConservedField field(n);
  for (swe::Conserved& w : field.cells) w = {h, h * u, h * v};
  return field;
}

inline double total_mass(const swe::Mesh& mesh,
                         const swe::ConservedField& field) {
  double m = 0.0;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
    m += mesh.cells[c].area * field.cells[c].h;
  return m;
}

// Largest |difference| over all cells and components.
inline double max_change(const swe::ConservedField& a,
                         const swe::ConservedField& b) {
  double d = 0.0;
  for (std::size_t c = 0; c < a.cells.size(); ++c) {
    d = std::max(d, std::abs(a.cells[c].h - b.cells[c].h));
    d = std::max(d, std::abs(a.cells[c].hu - b.cells[c].hu));
    d = std::max(d, std::abs(a.cells[c].hv - b.cells[c].hv));
  }
  return d;
}

// Deterministic pseudo-random draws for property tests.
class Random {
 public:
  explicit Random(unsigned seed = 20240811u) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  swe::Conserved state() {
    const double h = uniform(0.2, 6.0);
    return {h, h * uniform(-4.0, 4.0), h * uniform(-4.0, 4.0)};
  }

  swe::Vec2 unit() {
    const double a = uniform(0.0, 2.0 * 3.14159265358979323846);
    return {std::cos(a), std::sin(a)};
  }

 private:
  std::mt19937 gen_;
};

// Pairs each cell with the cell whose centroid is its reflection across
// x = 0. Requires a mesh that is exactly mirror-symmetric.
inline std::vector<int> mirror_cell_map(const swe::Mesh& mesh) {
  std::map<std::pair<double, double>, int> index;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const swe::Vec2 p = mesh.cells[c].centroid;
    index[{p.x, p.y}] = static_cast<int>(c);
  }
  std::vector<int> mirror(mesh.cells.size(), -1);
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const swe::Vec2 p = mesh.cells[c].centroid;
    const auto it = index.find({-p.x, p.y});
    if (it != index.end()) mirror[c] = it->second;
  }
  return mirror;
}

// Largest depth mismatch between mirrored cell pairs.
inline double mirror_asymmetry(const swe::ConservedField& field,
                               const std::vector<int>& mirror) {
  double d = 0.0;
  for (std::size_t c = 0; c < field.cells.size(); ++c) {
    if (mirror[c] < 0) return std::numeric_limits<double>::infinity();
    d = std::max(d, std::abs(field.cells[c].h - field.cells[mirror[c]].h));
  }
  return d;
}

}  // namespace test
