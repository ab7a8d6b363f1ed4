#include "graspsynth/collision.hpp"

#include <cmath>

namespace graspsynth {

CollisionResult exact_collision(const GripperModel& gripper, const Pose& g, const Scene& scene,
                                std::optional<int> exclude_instance) {
  CollisionResult result;

  // Table halfspace z <= table_height; contact counts.
  double lowest = std::numeric_limits<double>::max();
  int lowest_vertex = 0;
  for (size_t i = 0; i < gripper.body_mesh.vertices.size(); ++i) {
    const double z = g.apply(gripper.body_mesh.vertices[i]).z();
    if (z < lowest) {
      lowest = z;
      lowest_vertex = static_cast<int>(i);
    }
  }
  if (lowest <= scene.table_height) {
    result.colliding = true;
    // Any triangle containing the lowest vertex serves as witness.
    for (size_t t = 0; t < gripper.body_mesh.triangles.size(); ++t) {
      const auto& tri = gripper.body_mesh.triangles[t];
      if (tri[0] == lowest_vertex || tri[1] == lowest_vertex || tri[2] == lowest_vertex) {
        result.witness = {static_cast<int>(t), -1};
        break;
      }
    }
    result.witness_instance = kTableInstance;
    return result;
  }
  result.min_distance = lowest - scene.table_height;

  for (const Placement& p : scene.placements) {
    if (exclude_instance && p.instance_id == *exclude_instance) continue;
    int tri_g = -1, tri_s = -1;
    if (bvh_collide(gripper.body_bvh, g, p.world_bvh, Pose::identity(), &tri_g, &tri_s)) {
      result.colliding = true;
      result.min_distance = std::numeric_limits<double>::infinity();
      result.witness = {tri_g, tri_s};
      result.witness_instance = p.instance_id;
      return result;
    }
    result.min_distance = std::min(
        result.min_distance, bvh_distance(gripper.body_bvh, g, p.world_bvh, Pose::identity()));
  }
  return result;
}

bool voxel_collision(const GripperModel& gripper, const Pose& g, const VoxelGrid& grid) {
  if (grid.empty()) return false;

  const TriMesh body = gripper.body_mesh.transformed(g);
  const Aabb body_bounds = body.bounds();
  for (const auto& c : grid.occupied) {
    const Aabb cell = grid.cell_box(c);
    if (!cell.intersects(body_bounds)) continue;
    for (size_t t = 0; t < body.triangle_count(); ++t)
      if (tri_aabb_intersect(body.triangle(t), cell)) return true;
  }
  return false;
}

double soft_collision_score(const GripperModel& gripper, const Pose& g, const PointCloud& cloud,
                            std::optional<int> exclude_instance,
                            const SoftCollisionParams& params) {
  const Pose to_local = inverse(g);
  int inside = 0;
  double min_dist = std::numeric_limits<double>::max();

  for (size_t i = 0; i < cloud.size(); ++i) {
    if (cloud.source_flags[i] != 0) continue;
    if (exclude_instance && cloud.instance_ids[i] == *exclude_instance) continue;
    const Vec3 local = to_local.apply(cloud.points[i]);
    double d = std::numeric_limits<double>::max();
    for (const Aabb& box : gripper.body_boxes) {
      if (box.contains(local)) {
        d = 0.0;
        ++inside;
        break;
      }
      d = std::min(d, box.distance(local));
    }
    min_dist = std::min(min_dist, d);
  }

  if (min_dist > params.clearance_radius) return 0.0;
  const double proximity = 1.0 - min_dist / params.clearance_radius;
  const double raw = static_cast<double>(inside) + proximity;
  return std::tanh(0.5 * params.slope * raw);
}

}  // namespace graspsynth
