#pragma once

#include <cstdint>
#include <vector>

#include "graspsynth/pose.hpp"
#include "graspsynth/types.hpp"

namespace graspsynth {

/// Instance id of the table plane.
inline constexpr int kTableInstance = 0;

/// Labeled 3D points. Parallel arrays: normals is either empty or the same
/// length as points. source_flag distinguishes scene points (0) from gripper
/// indicator points (1).
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;
  std::vector<int> instance_ids;
  std::vector<uint8_t> source_flags;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_normals() const { return !normals.empty(); }

  void push(const Vec3& p, int instance, uint8_t flag = 0) {
    points.push_back(p);
    instance_ids.push_back(instance);
    source_flags.push_back(flag);
  }
  void push(const Vec3& p, const Vec3& n, int instance, uint8_t flag = 0) {
    push(p, instance, flag);
    normals.push_back(n);
  }

  PointCloud subset(const std::vector<int>& indices) const;

  /// Indices of points carrying the given instance id.
  std::vector<int> instance_indices(int instance) const;

  /// Distinct instance ids present, sorted ascending.
  std::vector<int> instances() const;

  PointCloud transformed(const Pose& pose) const;
};

/// Farthest point sampling. The first selected index is seed_index; each
/// following pick maximizes the distance to the already-selected set, ties
/// broken by lowest index. Throws std::invalid_argument if k exceeds the
/// cloud size or seed_index is out of range.
std::vector<int> farthest_point_sample(const PointCloud& cloud, int k, int seed_index);

}  // namespace graspsynth
