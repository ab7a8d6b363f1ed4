#pragma once

#include <array>
#include <string>
#include <vector>

#include "graspsynth/pose.hpp"
#include "graspsynth/trigeom.hpp"
#include "graspsynth/types.hpp"

namespace graspsynth {

class Rng;

/// Indexed triangle mesh, vertices in meters. Loaders normalize by dropping
/// zero-area triangles, so downstream geometry can assume non-degeneracy.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  size_t triangle_count() const { return triangles.size(); }

  Triangle triangle(size_t i) const {
    const auto& t = triangles[i];
    return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
  }

  Aabb bounds() const;
  double surface_area() const;

  /// Signed volume via the divergence theorem; positive for outward-wound
  /// watertight meshes.
  double signed_volume() const;

  TriMesh transformed(const Pose& pose) const;
};

/// Every edge shared by exactly two triangles (per undirected edge).
bool is_watertight(const TriMesh& mesh);

/// True if all triangle indices are in range.
bool indices_valid(const TriMesh& mesh);

/// Removes triangles with area below min_area and unreferenced vertices.
void drop_degenerate_triangles(TriMesh& mesh, double min_area = 1e-14);

/// Wavefront OBJ, vertices and triangular faces only.
TriMesh load_obj(const std::string& path);

/// Binary (little-endian) STL; vertices are welded exactly.
TriMesh load_stl_binary(const std::string& path);

struct SurfacePoints {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;  // unit, from triangle winding
};

/// Area-weighted uniform sampling of the mesh surface.
SurfacePoints sample_surface(const TriMesh& mesh, int n, Rng& rng);

}  // namespace graspsynth
