#include <cmath>
#include <vector>

#include "boundary.hpp"
#include "doctest.h"
#include "error.hpp"
#include "fvc.hpp"
#include "helpers.hpp"
#include "mesh.hpp"
#include "state.hpp"

using namespace swe;

namespace {

// Interior edge of a two-cell mesh.
int shared_edge(const Mesh& mesh) {
  for (int e = 0; e < static_cast<int>(mesh.edges.size()); ++e)
    if (mesh.is_interior(e)) return e;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("snapshot splits conserved data into primitives everywhere") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 3, 0, 2, 6, 4);
  const ConservedField field = test::uniform_field(
      static_cast<int>(mesh.cells.size()), 2.0, 0.5, -0.25);
  const FlowSnapshot snap = make_snapshot(mesh, field);

  REQUIRE(snap.h.size() == mesh.cells.size());
  REQUIRE(snap.vh.size() == mesh.vertices.size());
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    CHECK(snap.h[c] == 2.0);
    CHECK(snap.u[c] == 0.5);
    CHECK(snap.v[c] == -0.25);
  }
  // Vertex averages of equal values reproduce that value to rounding.
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    CHECK(snap.vh[v] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(snap.vu[v] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(snap.vv[v] == doctest::Approx(-0.25).epsilon(1e-14));
  }
}

TEST_CASE("departure point steps upstream along the normal") {
  const Vec2 d = backtrack_departure({0, 0}, 2.0, {1, 0}, 1.2, 0.1);
  CHECK(d.x == doctest::Approx(-0.24).epsilon(1e-14));
  CHECK(d.y == 0.0);

  // Zero face velocity leaves the point exactly in place.
  const Vec2 still = backtrack_departure({0.3, -0.7}, 0.0, {0, 1}, 1.2, 0.5);
  CHECK(still.x == 0.3);
  CHECK(still.y == -0.7);

  // Opposite velocities land symmetrically about the start point.
  const Vec2 n{std::sqrt(0.5), std::sqrt(0.5)};
  const Vec2 plus = backtrack_departure({0.1, 0.2}, 1.5, n, 1.2, 0.05);
  const Vec2 minus = backtrack_departure({0.1, 0.2}, -1.5, n, 1.2, 0.05);
  CHECK(0.5 * (plus.x + minus.x) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(0.5 * (plus.y + minus.y) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("predictor equations: direct example") {
  // No gradients: depth and tangential velocity persist, the normal
  // velocity picks up exactly the rotation term alpha*dt*f_c*u_tau.
  const ProjectedState out =
      predictor_update({2.0, 0.0, 1.0}, 0.0, 0.0, 9.81, 1.0, 0.12);
  CHECK(out.h == 2.0);
  CHECK(out.u_eta == 0.12);
  CHECK(out.u_tau == 1.0);

  // Pure depth slope decelerates the normal velocity: -alpha*dt*g*dh.
  const ProjectedState slope =
      predictor_update({1.0, 0.0, 0.0}, 0.5, 0.0, 10.0, 0.0, 0.1);
  CHECK(slope.h == 1.0);
  CHECK(slope.u_eta == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(slope.u_tau == 0.0);

  // Pure velocity divergence drains depth: h*(1 - alpha*dt*du).
  const ProjectedState drain =
      predictor_update({2.0, 0.0, 0.0}, 0.0, 0.25, 10.0, 0.0, 0.1);
  CHECK(drain.h == doctest::Approx(1.95).epsilon(1e-14));
}

TEST_CASE("predictor rotation couples the velocity pair exactly") {
  const double g = 9.81;
  for (double alpha_dt : {0.06, 0.12, 0.31}) {
    for (double f_c : {0.0, 0.5, 2.0, 10.0}) {
      for (double ue : {-3.0, 0.0, 1.25}) {
        for (double ut : {-1.5, 0.0, 0.75}) {
          const ProjectedState out =
              predictor_update({1.7, ue, ut}, 0.0, 0.0, g, f_c, alpha_dt);
          CHECK(out.h == 1.7);
          CHECK(out.u_eta == ue + alpha_dt * f_c * ut);
          CHECK(out.u_tau == ut - alpha_dt * f_c * ue);
        }
      }
    }
  }
}

TEST_CASE("interface prediction keeps a lake at rest flat") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 3, 0, 2, 6, 4);
  const ConservedField field =
      test::uniform_field(static_cast<int>(mesh.cells.size()), 2.0, 0.0, 0.0);
  const FlowSnapshot snap = make_snapshot(mesh, field);
  PhysParams params;
  params.f_c = 0.7;

  for (InterpolationMode mode :
       {InterpolationMode::centroid_line, InterpolationMode::barycentric,
        InterpolationMode::nearest_cell}) {
    PredictorConfig config;
    config.interpolation = mode;
    for (int e = 0; e < static_cast<int>(mesh.edges.size()); ++e) {
      if (!mesh.is_interior(e)) continue;
      const Conserved w =
          predict_interface(mesh, snap, params, config, e, 0.01);
      CHECK(w.h == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(std::abs(w.hu) <= 1e-14);
      CHECK(std::abs(w.hv) <= 1e-14);
    }
  }
}

TEST_CASE("interface prediction transports a uniform stream unchanged") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 3, 0, 2, 6, 4);
  const ConservedField field = test::uniform_field(
      static_cast<int>(mesh.cells.size()), 2.0, 0.8, -0.3);
  const FlowSnapshot snap = make_snapshot(mesh, field);
  const PhysParams params;  // f_c = 0
  const PredictorConfig config;

  for (int e = 0; e < static_cast<int>(mesh.edges.size()); ++e) {
    if (!mesh.is_interior(e)) continue;
    const Conserved w = predict_interface(mesh, snap, params, config, e, 0.01);
    CHECK(w.h == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(w.hu == doctest::Approx(1.6).epsilon(1e-13));
    CHECK(w.hv == doctest::Approx(-0.6).epsilon(1e-13));
  }
}

TEST_CASE("interface prediction rejects boundary edges") {
  const Mesh mesh = test::two_triangle_square();
  const ConservedField field = test::uniform_field(2, 1.0, 0.0, 0.0);
  const FlowSnapshot snap = make_snapshot(mesh, field);
  CHECK_THROWS_WITH_AS(
      predict_interface(mesh, snap, PhysParams{}, PredictorConfig{},
                        mesh.boundary_edges.front(), 0.01),
      doctest::Contains("interior edges"), Error);
}

TEST_CASE("a draining interface refuses to predict a non-positive depth") {
  const Mesh mesh = test::two_triangle_square();
  const int e = shared_edge(mesh);
  const Vec2 n = mesh.edges[e].normal;

  // Strongly diverging flow: left cell races against the normal, right cell
  // along it, so the compression term wipes out the whole depth.
  ConservedField field(2);
  const double speed = 100.0;
  field.cells[mesh.edges[e].left] = {1.0, -speed * n.x, -speed * n.y};
  field.cells[mesh.edges[e].right] = {1.0, speed * n.x, speed * n.y};
  const FlowSnapshot snap = make_snapshot(mesh, field);

  CHECK_THROWS_WITH_AS(
      predict_interface(mesh, snap, PhysParams{}, PredictorConfig{}, e, 0.5),
      doctest::Contains("non-positive depth"), Error);
}

TEST_CASE("the predicted interface follows the upstream side") {
  // Two mirror-image triangles, deep water on the left, shallow on the
  // right, a uniform stream across the shared face. Flow from the deep side
  // must predict a deeper interface than flow from the shallow side.
  const Mesh mesh = test::symmetric_diamond_mesh();
  const int e = shared_edge(mesh);
  const int left_cell =
      mesh.cells[mesh.edges[e].left].centroid.x < 0 ? mesh.edges[e].left
                                                    : mesh.edges[e].right;
  const int right_cell =
      left_cell == mesh.edges[e].left ? mesh.edges[e].right
                                      : mesh.edges[e].left;
  const double toward_right =
      mesh.edges[e].normal.x > 0 ? 1.0 : -1.0;  // +x in edge-normal terms

  auto depth_with_flow = [&](double u) {
    ConservedField field(2);
    field.cells[left_cell] = {4.0, 4.0 * u, 0.0};
    field.cells[right_cell] = {2.0, 2.0 * u, 0.0};
    const FlowSnapshot snap = make_snapshot(mesh, field);
    return predict_interface(mesh, snap, PhysParams{}, PredictorConfig{}, e,
                             0.2)
        .h;
  };

  const double from_deep = depth_with_flow(1.5 * toward_right);
  const double from_shallow = depth_with_flow(-1.5 * toward_right);
  CHECK(from_deep > from_shallow);
  CHECK(from_deep > 0.0);
  CHECK(from_shallow > 0.0);
}

TEST_CASE("point sampling: uniform fields are uniform everywhere") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 3, 0, 2, 6, 4);
  const ConservedField field = test::uniform_field(
      static_cast<int>(mesh.cells.size()), 2.0, 0.5, -0.25);
  const FlowSnapshot snap = make_snapshot(mesh, field);

  const std::vector<Vec2> points{
      {1.5, 1.0},  {0.01, 0.01}, {2.99, 1.99},
      {-5.0, 1.0},  // far outside: clamps to the nearest boundary cell
      {1.5, 40.0},
  };
  for (InterpolationMode mode :
       {InterpolationMode::centroid_line, InterpolationMode::barycentric,
        InterpolationMode::nearest_cell}) {
    for (const Vec2 p : points) {
      const Primitive w = interpolate_state(mesh, snap, mode, p, 0);
      CHECK(w.h == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(w.u == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(w.v == doctest::Approx(-0.25).epsilon(1e-14));
    }
  }
}

TEST_CASE("point sampling: nearest mode returns the host cell value") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 2, 0, 2, 4, 4);
  ConservedField field(mesh.cells.size());
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
    field.cells[c] = {1.0 + 0.125 * static_cast<double>(c), 0.0, 0.0};
  const FlowSnapshot snap = make_snapshot(mesh, field);

  for (int c = 0; c < static_cast<int>(mesh.cells.size()); c += 3) {
    const Primitive w = interpolate_state(
        mesh, snap, InterpolationMode::nearest_cell, mesh.cells[c].centroid,
        0);
    CHECK(w.h == snap.h[c]);
  }
}

TEST_CASE("point sampling: vertex interpolation stays within vertex bounds") {
  const Mesh mesh = test::perturbed_rect_mesh(0, 2, 0, 2, 4, 4);
  ConservedField field(mesh.cells.size());
  test::Random rng;
  for (auto& w : field.cells) w = rng.state();
  const FlowSnapshot snap = make_snapshot(mesh, field);

  for (int c = 0; c < static_cast<int>(mesh.cells.size()); ++c) {
    const auto& cell = mesh.cells[c];
    // Sample at the centroid: a strict convex combination of the three
    // vertex averages, so it must land inside their range.
    const Primitive w = interpolate_state(
        mesh, snap, InterpolationMode::barycentric, cell.centroid, c);
    double lo = snap.vh[cell.vertex[0]], hi = lo;
    for (int k = 1; k < 3; ++k) {
      lo = std::min(lo, snap.vh[cell.vertex[k]]);
      hi = std::max(hi, snap.vh[cell.vertex[k]]);
    }
    CHECK(w.h >= lo - 1e-12);
    CHECK(w.h <= hi + 1e-12);

    // Sample at a vertex: reproduces that vertex average.
    const int v = cell.vertex[0];
    const Primitive at_vertex = interpolate_state(
        mesh, snap, InterpolationMode::barycentric, mesh.vertices[v].pos, c);
    CHECK(at_vertex.h == doctest::Approx(snap.vh[v]).epsilon(1e-12));
  }
}

TEST_CASE("one step leaves a lake at rest untouched") {
  const Mesh mesh = generate_rect_mesh(0, 10, 0, 10, 8, 8, DiagonalPattern::alternating);
  const int n = static_cast<int>(mesh.cells.size());
  const ConservedField field = test::uniform_field(n, 2.0, 0.0, 0.0);

  for (InterpolationMode mode :
       {InterpolationMode::centroid_line, InterpolationMode::barycentric}) {
    for (double f_c : {0.0, 5.0}) {
      for (BoundaryKind kind :
           {BoundaryKind::wall, BoundaryKind::transmissive}) {
        PhysParams params;
        params.f_c = f_c;
        PredictorConfig config;
        config.interpolation = mode;
        const BoundarySpec bc = BoundarySpec::uniform(mesh, kind);
        const double dt =
            compute_time_step(mesh, field, 0.4, config.alpha, params.g);
        const ConservedField next =
            fvc_step(mesh, field, params, config, bc, dt);
        CHECK(test::max_change(field, next) <= 1e-13);
      }
    }
  }
}

TEST_CASE("one step preserves a uniform stream in an open domain") {
  const Mesh mesh = generate_rect_mesh(0, 10, 0, 10, 8, 8, DiagonalPattern::alternating);
  const int n = static_cast<int>(mesh.cells.size());
  const ConservedField field = test::uniform_field(n, 2.0, 0.7, -0.4);
  const PhysParams params;
  const PredictorConfig config;
  const BoundarySpec bc =
      BoundarySpec::uniform(mesh, BoundaryKind::transmissive);
  const double dt = compute_time_step(mesh, field, 0.4, config.alpha,
                                      params.g);
  const ConservedField next = fvc_step(mesh, field, params, config, bc, dt);
  CHECK(test::max_change(field, next) <= 1e-13);
}

TEST_CASE("walls conserve mass through a violent step") {
  const Mesh mesh = generate_rect_mesh(0, 100, 0, 100, 16, 16,
                                          DiagonalPattern::alternating);
  ConservedField field(mesh.cells.size());
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
    field.cells[c] = {mesh.cells[c].centroid.x <= 50.0 ? 4.0 : 2.0, 0.0, 0.0};

  PhysParams params;
  params.f_c = 3.0;
  const PredictorConfig config;
  const BoundarySpec bc = BoundarySpec::uniform(mesh, BoundaryKind::wall);

  const double m0 = test::total_mass(mesh, field);
  ConservedField w = field;
  for (int s = 0; s < 5; ++s) {
    const double dt =
        compute_time_step(mesh, w, 0.45, config.alpha, params.g);
    w = fvc_step(mesh, w, params, config, bc, dt);
  }
  CHECK(std::abs(test::total_mass(mesh, w) - m0) <= 1e-12 * m0);
}

TEST_CASE("a symmetric burst stays symmetric") {
  const Mesh mesh = generate_rect_mesh(-10, 10, -10, 10, 16, 16,
                                          DiagonalPattern::alternating);
  const auto mirror = test::mirror_cell_map(mesh);
  for (int m : mirror) REQUIRE(m >= 0);

  ConservedField field(mesh.cells.size());
  for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
    const Vec2 x = mesh.cells[c].centroid;
    field.cells[c] = {std::hypot(x.x, x.y) < 4.0 ? 2.0 : 1.0, 0.0, 0.0};
  }
  const PhysParams params;
  const PredictorConfig config;
  const BoundarySpec bc =
      BoundarySpec::uniform(mesh, BoundaryKind::transmissive);

  for (int s = 0; s < 30; ++s) {
    const double dt =
        compute_time_step(mesh, field, 0.45, config.alpha, params.g);
    field = fvc_step(mesh, field, params, config, bc, dt);
  }
  CHECK(test::mirror_asymmetry(field, mirror) <= 1e-10);
}
