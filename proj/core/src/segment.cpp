#include "graspsynth/segment.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "graspsynth/rng.hpp"

namespace graspsynth {

namespace {

// Uniform-grid neighbor index over the cloud, cell size = query radius.
class PointGrid {
 public:
  PointGrid(const PointCloud& cloud, double cell) : cloud_(cloud), cell_(cell) {
    for (size_t i = 0; i < cloud.size(); ++i) cells_[key(cloud.points[i])].push_back(i);
  }

  /// Index of the nearest point within `radius` whose instance differs from
  /// `instance`, or -1.
  int nearest_other_instance(const Vec3& p, int instance, double radius) const {
    const auto base = cell_coords(p);
    int best = -1;
    double best_d2 = radius * radius;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const auto it = cells_.find(pack(base[0] + dx, base[1] + dy, base[2] + dz));
          if (it == cells_.end()) continue;
          for (size_t j : it->second) {
            if (cloud_.instance_ids[j] == instance) continue;
            const double d2 = (cloud_.points[j] - p).squaredNorm();
            // Strictly inside the band; ties on distance go to lowest index.
            if (d2 < best_d2 || (d2 == best_d2 && best >= 0 && static_cast<int>(j) < best)) {
              best_d2 = d2;
              best = static_cast<int>(j);
            }
          }
        }
    return best;
  }

 private:
  std::array<long long, 3> cell_coords(const Vec3& p) const {
    return {static_cast<long long>(std::floor(p.x() / cell_)),
            static_cast<long long>(std::floor(p.y() / cell_)),
            static_cast<long long>(std::floor(p.z() / cell_))};
  }
  long long key(const Vec3& p) const {
    const auto c = cell_coords(p);
    return pack(c[0], c[1], c[2]);
  }
  static long long pack(long long x, long long y, long long z) {
    return (x * 73856093LL) ^ (y * 19349663LL) ^ (z * 83492791LL);
  }

  const PointCloud& cloud_;
  double cell_;
  std::unordered_map<long long, std::vector<size_t>> cells_;
};

}  // namespace

PointCloud corrupt_segmentation(const PointCloud& cloud, double flip_prob, double merge_prob,
                                Rng& rng, double band_width) {
  PointCloud out = cloud;
  if (cloud.empty()) return out;

  const PointGrid grid(cloud, band_width);

  // Boundary band and per-instance contact counts, from the input labels.
  std::vector<int> band_neighbor(cloud.size(), -1);
  std::map<int, std::map<int, int>> contacts;  // instance -> neighbor instance -> count
  for (size_t i = 0; i < cloud.size(); ++i) {
    const int nb = grid.nearest_other_instance(cloud.points[i], cloud.instance_ids[i], band_width);
    band_neighbor[i] = nb;
    if (nb >= 0) {
      const int self = cloud.instance_ids[i];
      const int other = cloud.instance_ids[nb];
      if (self != kTableInstance && other != kTableInstance) ++contacts[self][other];
    }
  }

  // Salt-and-pepper flips, point order.
  for (size_t i = 0; i < cloud.size(); ++i) {
    if (band_neighbor[i] < 0) continue;
    if (rng.uniform() < flip_prob) out.instance_ids[i] = cloud.instance_ids[band_neighbor[i]];
  }

  std::map<int, int> instance_size;
  for (int id : cloud.instance_ids) ++instance_size[id];

  // Whole-instance merges, ascending instance order. An instance counts as
  // partially occluded when a contacting neighbor shows more points than it
  // does; it merges into its largest-contact neighbor.
  for (const auto& [instance, neighbors] : contacts) {
    int target = -1, best_count = 0;
    for (const auto& [other, count] : neighbors)
      if (count > best_count || (count == best_count && other < target)) {
        best_count = count;
        target = other;
      }
    if (target < 0 || instance_size[instance] >= instance_size[target]) continue;
    if (rng.uniform() < merge_prob) {
      for (size_t i = 0; i < cloud.size(); ++i)
        if (cloud.instance_ids[i] == instance) out.instance_ids[i] = target;
    }
  }
  return out;
}

CropResult crop_target(const PointCloud& cloud, int target_instance, double box_size,
                       double center_noise, int n_points, Rng& rng) {
  const auto target_idx = cloud.instance_indices(target_instance);
  if (target_idx.empty())
    throw std::invalid_argument("crop_target: target instance not present in cloud");
  if (n_points <= 0) throw std::invalid_argument("crop_target: n_points must be positive");

  Vec3 centroid = Vec3::Zero();
  for (int i : target_idx) centroid += cloud.points[i];
  centroid /= static_cast<double>(target_idx.size());
  const Vec3 noise{rng.uniform(-center_noise, center_noise),
                   rng.uniform(-center_noise, center_noise),
                   rng.uniform(-center_noise, center_noise)};
  const Vec3 center = centroid + noise;
  const Aabb box{center - Vec3::Constant(0.5 * box_size), center + Vec3::Constant(0.5 * box_size)};

  std::vector<int> inside;
  for (size_t i = 0; i < cloud.size(); ++i)
    if (box.contains(cloud.points[i])) inside.push_back(static_cast<int>(i));
  if (inside.empty()) throw std::runtime_error("crop_target: crop box contains no points");

  PointCloud in_box = cloud.subset(inside);
  PointCloud crop;
  if (static_cast<int>(in_box.size()) > n_points) {
    crop = in_box.subset(farthest_point_sample(in_box, n_points, 0));
  } else {
    crop = in_box;
    while (static_cast<int>(crop.size()) < n_points) {
      const int pick = rng.uniform_int(static_cast<int>(in_box.size()));
      crop.push(in_box.points[pick], in_box.instance_ids[pick], in_box.source_flags[pick]);
      if (in_box.has_normals()) crop.normals.push_back(in_box.normals[pick]);
    }
  }

  CropResult result;
  result.scene_crop = std::move(crop);
  result.object_crop =
      result.scene_crop.subset(result.scene_crop.instance_indices(target_instance));
  return result;
}

}  // namespace graspsynth
