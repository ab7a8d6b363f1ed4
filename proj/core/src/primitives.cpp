#include "graspsynth/primitives.hpp"

#include <cmath>

namespace graspsynth {

namespace {
constexpr double kPoleRadius = 1e-12;
}

void orient_outward(TriMesh& mesh) {
  if (mesh.signed_volume() < 0.0)
    for (auto& t : mesh.triangles) std::swap(t[1], t[2]);
}

TriMesh make_box(const Vec3& extent) {
  const Vec3 h = 0.5 * extent;
  TriMesh mesh;
  mesh.vertices = {{-h.x(), -h.y(), -h.z()}, {h.x(), -h.y(), -h.z()}, {h.x(), h.y(), -h.z()},
                   {-h.x(), h.y(), -h.z()},  {-h.x(), -h.y(), h.z()}, {h.x(), -h.y(), h.z()},
                   {h.x(), h.y(), h.z()},    {-h.x(), h.y(), h.z()}};
  mesh.triangles = {{0, 2, 1}, {0, 3, 2},   // -z
                    {4, 5, 6}, {4, 6, 7},   // +z
                    {0, 1, 5}, {0, 5, 4},   // -y
                    {2, 3, 7}, {2, 7, 6},   // +y
                    {1, 2, 6}, {1, 6, 5},   // +x
                    {3, 0, 4}, {3, 4, 7}};  // -x
  orient_outward(mesh);
  return mesh;
}

TriMesh revolve_profile(const std::vector<Eigen::Vector2d>& profile, int segments) {
  TriMesh mesh;
  const int np = static_cast<int>(profile.size());
  std::vector<std::vector<int>> ring_index(np);

  // One vertex ring per off-axis profile point, a single pole vertex otherwise.
  for (int i = 0; i < np; ++i) {
    const double r = profile[i].x();
    const double z = profile[i].y();
    if (r <= kPoleRadius) {
      ring_index[i] = {static_cast<int>(mesh.vertices.size())};
      mesh.vertices.emplace_back(0.0, 0.0, z);
    } else {
      ring_index[i].resize(segments);
      for (int j = 0; j < segments; ++j) {
        const double theta = 2.0 * M_PI * j / segments;
        ring_index[i][j] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.emplace_back(r * std::cos(theta), r * std::sin(theta), z);
      }
    }
  }

  for (int i = 0; i < np; ++i) {
    const int next = (i + 1) % np;
    const bool pole_a = ring_index[i].size() == 1;
    const bool pole_b = ring_index[next].size() == 1;
    if (pole_a && pole_b) continue;  // segment along the axis, no surface
    for (int j = 0; j < segments; ++j) {
      const int jn = (j + 1) % segments;
      if (pole_a) {
        mesh.triangles.push_back({ring_index[i][0], ring_index[next][j], ring_index[next][jn]});
      } else if (pole_b) {
        mesh.triangles.push_back({ring_index[i][j], ring_index[next][0], ring_index[i][jn]});
      } else {
        mesh.triangles.push_back({ring_index[i][j], ring_index[next][j], ring_index[next][jn]});
        mesh.triangles.push_back({ring_index[i][j], ring_index[next][jn], ring_index[i][jn]});
      }
    }
  }
  drop_degenerate_triangles(mesh);
  orient_outward(mesh);
  return mesh;
}

TriMesh make_cylinder(double radius, double height, int segments) {
  const double h = 0.5 * height;
  return revolve_profile({{0.0, -h}, {radius, -h}, {radius, h}, {0.0, h}}, segments);
}

TriMesh make_bowl(double bottom_radius, double top_radius, double height, double thickness,
                  int segments) {
  const double t = thickness;
  return revolve_profile({{0.0, 0.0},
                          {bottom_radius, 0.0},
                          {top_radius, height},
                          {top_radius - t, height},
                          {bottom_radius - t, t},
                          {0.0, t}},
                         segments);
}

TriMesh make_bottle(double body_radius, double body_height, double neck_radius,
                    double neck_height, int segments) {
  const double shoulder = 0.3 * neck_height;
  return revolve_profile({{0.0, 0.0},
                          {body_radius, 0.0},
                          {body_radius, body_height},
                          {neck_radius, body_height + shoulder},
                          {neck_radius, body_height + shoulder + neck_height},
                          {0.0, body_height + shoulder + neck_height}},
                         segments);
}

}  // namespace graspsynth
