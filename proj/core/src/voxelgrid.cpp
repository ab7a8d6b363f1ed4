#include "graspsynth/voxelgrid.hpp"

#include <sstream>

namespace graspsynth {

std::string VoxelGrid::to_json() const {
  std::ostringstream out;
  out << "{\"voxel_size\":" << voxel_size << ",\"origin\":[" << origin.x() << ","
      << origin.y() << "," << origin.z() << "],\"occupied\":[";
  bool first = true;
  for (const auto& c : occupied) {
    if (!first) out << ",";
    first = false;
    out << "[" << c[0] << "," << c[1] << "," << c[2] << "]";
  }
  out << "]}";
  return out.str();
}

VoxelGrid voxelize_scene(const PointCloud& cloud, int points_per_object, double voxel_size,
                         bool exclude_target, int target_id) {
  VoxelGrid grid;
  grid.voxel_size = voxel_size;

  for (int instance : cloud.instances()) {
    if (instance == kTableInstance) continue;
    if (exclude_target && instance == target_id) continue;
    const PointCloud object = cloud.subset(cloud.instance_indices(instance));
    const int k = std::min<int>(points_per_object, static_cast<int>(object.size()));
    if (k <= 0) continue;
    for (int idx : farthest_point_sample(object, k, 0)) grid.insert(object.points[idx]);
  }
  return grid;
}

}  // namespace graspsynth
