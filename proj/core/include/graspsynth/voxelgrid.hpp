#pragma once

#include <array>
#include <set>
#include <string>

#include "graspsynth/pointcloud.hpp"

namespace graspsynth {

/// Sparse occupancy grid. Integer coordinates map to cube centers
/// origin + (i + 0.5) * voxel_size per axis.
struct VoxelGrid {
  double voxel_size = 0.02;
  Vec3 origin = Vec3::Zero();
  std::set<std::array<int, 3>> occupied;

  bool empty() const { return occupied.empty(); }

  std::array<int, 3> coords_of(const Vec3& p) const {
    return {static_cast<int>(std::floor((p.x() - origin.x()) / voxel_size)),
            static_cast<int>(std::floor((p.y() - origin.y()) / voxel_size)),
            static_cast<int>(std::floor((p.z() - origin.z()) / voxel_size))};
  }

  Aabb cell_box(const std::array<int, 3>& c) const {
    const Vec3 lo = origin + voxel_size * Vec3(c[0], c[1], c[2]);
    return {lo, lo + Vec3::Constant(voxel_size)};
  }

  void insert(const Vec3& p) { occupied.insert(coords_of(p)); }

  /// Debug dump: {"voxel_size":..., "origin":[...], "occupied":[[i,j,k],...]}.
  std::string to_json() const;
};

/// Builds the heuristic obstacle grid from a labeled cloud: per non-table
/// instance (skipping the target when exclude_target is set), up to
/// points_per_object farthest-point samples each occupy one voxel cube.
VoxelGrid voxelize_scene(const PointCloud& cloud, int points_per_object, double voxel_size,
                         bool exclude_target, int target_id);

}  // namespace graspsynth
