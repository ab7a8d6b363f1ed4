#pragma once

#include <optional>
#include <vector>

#include "graspsynth/trimesh.hpp"

namespace graspsynth {

/// Bounding-volume hierarchy over a triangle mesh. Self-contained: triangle
/// geometry is copied at build time, so the source mesh may be discarded.
/// Read-only after construction and safe to share across threads.
class Bvh {
 public:
  Bvh() = default;
  explicit Bvh(const TriMesh& mesh);

  struct Hit {
    double t = 0.0;    // distance along the (unit) ray direction
    int triangle = 0;  // index into the source mesh
  };

  /// Nearest positive-t intersection; ties broken by lowest triangle index.
  std::optional<Hit> raycast(const Vec3& origin, const Vec3& dir) const;

  /// Distance from a point to the mesh surface (0 only on the surface).
  double distance(const Vec3& p) const;

  const Aabb& bounds() const { return nodes_.empty() ? empty_box_ : nodes_[0].box; }
  size_t triangle_count() const { return tris_.size(); }
  bool empty() const { return tris_.empty(); }

  // Dual-traversal queries. Poses map each BVH's local frame into a common
  // (world) frame.
  friend bool bvh_collide(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b,
                          int* tri_a, int* tri_b);
  friend double bvh_distance(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b);

 private:
  struct Node {
    Aabb box;
    int left = -1, right = -1;  // internal children
    int first = 0, count = 0;   // leaf triangle range; count > 0 marks a leaf
  };

  int build(std::vector<int>& order, int begin, int end);
  void raycast_node(int node, const Vec3& origin, const Vec3& inv_dir, const Vec3& dir,
                    std::optional<Hit>& best) const;
  void distance_node(int node, const Vec3& p, double& best) const;

  std::vector<Node> nodes_;
  std::vector<Triangle> tris_;  // leaf order
  std::vector<int> tri_ids_;    // leaf order -> source mesh triangle index
  static const Aabb empty_box_;
};

/// Triangle-exact overlap test between two posed meshes. On contact returns
/// true and (optionally) a witness triangle pair in source-mesh indices.
bool bvh_collide(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b,
                 int* tri_a = nullptr, int* tri_b = nullptr);

/// Minimum surface-to-surface distance between two posed meshes (0 if they
/// intersect).
double bvh_distance(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b);

}  // namespace graspsynth
