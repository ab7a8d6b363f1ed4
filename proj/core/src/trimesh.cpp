#include "graspsynth/trimesh.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "graspsynth/rng.hpp"

namespace graspsynth {

Aabb TriMesh::bounds() const {
  Aabb box;
  for (const Vec3& v : vertices) box.extend(v);
  return box;
}

double TriMesh::surface_area() const {
  double area = 0.0;
  for (size_t i = 0; i < triangles.size(); ++i) area += triangle(i).area();
  return area;
}

double TriMesh::signed_volume() const {
  double vol = 0.0;
  for (const auto& t : triangles) {
    const Vec3& a = vertices[t[0]];
    const Vec3& b = vertices[t[1]];
    const Vec3& c = vertices[t[2]];
    vol += a.dot(b.cross(c)) / 6.0;
  }
  return vol;
}

TriMesh TriMesh::transformed(const Pose& pose) const {
  TriMesh out;
  out.vertices.reserve(vertices.size());
  for (const Vec3& v : vertices) out.vertices.push_back(pose.apply(v));
  out.triangles = triangles;
  return out;
}

bool is_watertight(const TriMesh& mesh) {
  if (mesh.triangles.empty()) return false;
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  }
  for (const auto& [edge, count] : edge_count)
    if (count != 2) return false;
  return true;
}

bool indices_valid(const TriMesh& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  for (const auto& t : mesh.triangles)
    for (int idx : t)
      if (idx < 0 || idx >= n) return false;
  return true;
}

void drop_degenerate_triangles(TriMesh& mesh, double min_area) {
  std::vector<std::array<int, 3>> kept;
  kept.reserve(mesh.triangles.size());
  for (size_t i = 0; i < mesh.triangles.size(); ++i)
    if (mesh.triangle(i).area() > min_area) kept.push_back(mesh.triangles[i]);
  mesh.triangles = std::move(kept);
}

TriMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open OBJ file: " + path);

  TriMesh mesh;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) throw std::runtime_error("malformed vertex in " + path);
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> face;
      std::string tok;
      while (ls >> tok) {
        // "v", "v/vt", "v//vn", "v/vt/vn" — only the vertex index is used.
        const size_t slash = tok.find('/');
        const int idx = std::stoi(slash == std::string::npos ? tok : tok.substr(0, slash));
        // OBJ indices are 1-based; negative indices count from the end.
        face.push_back(idx > 0 ? idx - 1 : static_cast<int>(mesh.vertices.size()) + idx);
      }
      if (face.size() != 3)
        throw std::runtime_error("non-triangular face in " + path);
      mesh.triangles.push_back({face[0], face[1], face[2]});
    }
  }
  if (!indices_valid(mesh)) throw std::runtime_error("face index out of range in " + path);
  drop_degenerate_triangles(mesh);
  return mesh;
}

TriMesh load_stl_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open STL file: " + path);

  char header[80];
  in.read(header, 80);
  uint32_t n_tris = 0;
  in.read(reinterpret_cast<char*>(&n_tris), 4);
  if (!in) throw std::runtime_error("truncated STL header: " + path);

  TriMesh mesh;
  std::map<std::array<float, 3>, int> vertex_index;
  auto intern = [&](const std::array<float, 3>& v) {
    auto [it, inserted] = vertex_index.try_emplace(v, static_cast<int>(mesh.vertices.size()));
    if (inserted) mesh.vertices.emplace_back(v[0], v[1], v[2]);
    return it->second;
  };

  for (uint32_t i = 0; i < n_tris; ++i) {
    float data[12];  // normal + 3 vertices
    in.read(reinterpret_cast<char*>(data), sizeof(data));
    uint16_t attr = 0;
    in.read(reinterpret_cast<char*>(&attr), 2);
    if (!in) throw std::runtime_error("truncated STL facet in " + path);
    std::array<int, 3> tri;
    for (int k = 0; k < 3; ++k)
      tri[k] = intern({data[3 + 3 * k], data[4 + 3 * k], data[5 + 3 * k]});
    mesh.triangles.push_back(tri);
  }
  drop_degenerate_triangles(mesh);
  return mesh;
}

SurfacePoints sample_surface(const TriMesh& mesh, int n, Rng& rng) {
  SurfacePoints out;
  if (n <= 0 || mesh.triangles.empty()) return out;

  std::vector<double> cumulative(mesh.triangles.size());
  double total = 0.0;
  for (size_t i = 0; i < mesh.triangles.size(); ++i) {
    total += mesh.triangle(i).area();
    cumulative[i] = total;
  }
  if (total <= 0.0) return out;

  out.points.reserve(n);
  out.normals.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform() * total;
    const size_t ti = std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                      cumulative.begin();
    const Triangle tri = mesh.triangle(std::min(ti, mesh.triangles.size() - 1));
    double r1 = rng.uniform(), r2 = rng.uniform();
    if (r1 + r2 > 1.0) {
      r1 = 1.0 - r1;
      r2 = 1.0 - r2;
    }
    out.points.push_back(tri.a + r1 * (tri.b - tri.a) + r2 * (tri.c - tri.a));
    out.normals.push_back(tri.raw_normal().normalized());
  }
  return out;
}

}  // namespace graspsynth
