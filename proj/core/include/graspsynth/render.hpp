#pragma once

#include "graspsynth/pointcloud.hpp"
#include "graspsynth/scene.hpp"

namespace graspsynth {

/// Pinhole camera. Camera frame: +z forward, +x right, +y down (image v
/// grows downward). extrinsic maps camera frame to world.
struct CameraModel {
  double fx = 0.0, fy = 0.0;
  double cx = 0.0, cy = 0.0;
  int width = 0, height = 0;
  Pose extrinsic;

  /// Camera at `eye` looking at `target`, principal point centered,
  /// focal length chosen for the given horizontal field of view.
  static CameraModel look_at(const Vec3& eye, const Vec3& target, int width, int height,
                             double horizontal_fov_rad);

  bool valid() const { return fx > 0 && fy > 0 && width >= 16 && height >= 16; }
};

/// Single-view depth render: one ray per pixel center, nearest hit
/// back-projected to a labeled 3D point (table plane = instance 0, normals
/// flipped toward the camera); missed rays produce nothing, so occluded
/// surfaces are absent by construction. Optional Gaussian noise perturbs the
/// hit range along the ray.
PointCloud render_cloud(const Scene& scene, const CameraModel& camera,
                        double depth_noise_sigma = 0.0, uint64_t noise_seed = 0);

}  // namespace graspsynth
