#include "graspsynth/pointcloud.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graspsynth {

PointCloud PointCloud::subset(const std::vector<int>& indices) const {
  PointCloud out;
  out.points.reserve(indices.size());
  out.instance_ids.reserve(indices.size());
  out.source_flags.reserve(indices.size());
  if (has_normals()) out.normals.reserve(indices.size());
  for (int i : indices) {
    out.points.push_back(points[i]);
    out.instance_ids.push_back(instance_ids[i]);
    out.source_flags.push_back(source_flags[i]);
    if (has_normals()) out.normals.push_back(normals[i]);
  }
  return out;
}

std::vector<int> PointCloud::instance_indices(int instance) const {
  std::vector<int> out;
  for (size_t i = 0; i < instance_ids.size(); ++i)
    if (instance_ids[i] == instance) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> PointCloud::instances() const {
  std::set<int> ids(instance_ids.begin(), instance_ids.end());
  return {ids.begin(), ids.end()};
}

PointCloud PointCloud::transformed(const Pose& pose) const {
  PointCloud out = *this;
  for (Vec3& p : out.points) p = pose.apply(p);
  for (Vec3& n : out.normals) n = pose.rotate(n);
  return out;
}

std::vector<int> farthest_point_sample(const PointCloud& cloud, int k, int seed_index) {
  const int n = static_cast<int>(cloud.size());
  if (k > n) throw std::invalid_argument("farthest_point_sample: k exceeds point count");
  if (k < 0) throw std::invalid_argument("farthest_point_sample: negative k");
  if (k == 0) return {};
  if (seed_index < 0 || seed_index >= n)
    throw std::invalid_argument("farthest_point_sample: seed index out of range");

  std::vector<int> selected;
  selected.reserve(k);
  selected.push_back(seed_index);

  std::vector<double> min_dist2(n);
  for (int i = 0; i < n; ++i)
    min_dist2[i] = (cloud.points[i] - cloud.points[seed_index]).squaredNorm();

  while (static_cast<int>(selected.size()) < k) {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (min_dist2[i] > min_dist2[best]) best = i;  // strict: ties keep lowest index
    selected.push_back(best);
    for (int i = 0; i < n; ++i)
      min_dist2[i] = std::min(min_dist2[i], (cloud.points[i] - cloud.points[best]).squaredNorm());
  }
  return selected;
}

}  // namespace graspsynth
