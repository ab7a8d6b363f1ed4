#pragma once

#include "graspsynth/pointcloud.hpp"

namespace graspsynth {

class Rng;

/// Mimics imperfect instance segmentation on a labeled cloud; geometry is
/// never touched, only instance ids.
///
///  - Salt-and-pepper: points within the boundary band (closer than
///    band_width to a point of another instance) flip to the nearest other
///    instance's label with probability flip_prob.
///  - Merging: an instance in boundary contact with another non-table
///    instance (the stand-in for "partially occluded") has, with probability
///    merge_prob, its whole label replaced by the neighbor it shares the
///    most band contacts with.
///
/// Flips and merge decisions are both computed from the input labels, flips
/// applied first, merges second.
PointCloud corrupt_segmentation(const PointCloud& cloud, double flip_prob, double merge_prob,
                                Rng& rng, double band_width = 0.005);

struct CropResult {
  PointCloud scene_crop;   // X: axis-aligned cube around the target, n_points
  PointCloud object_crop;  // X_o: subset of X with the target's instance id
};

/// Cube crop of side box_size centered on the target centroid plus uniform
/// per-axis noise up to center_noise. The crop is farthest-point downsampled
/// to exactly n_points (seeded at the first in-box point); short crops are
/// padded by resampling with replacement. Throws std::invalid_argument when
/// the target id is absent.
CropResult crop_target(const PointCloud& cloud, int target_instance, double box_size,
                       double center_noise, int n_points, Rng& rng);

}  // namespace graspsynth
