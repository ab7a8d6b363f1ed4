#include "graspsynth/render.hpp"

#include <stdexcept>

#include "graspsynth/rng.hpp"

namespace graspsynth {

CameraModel CameraModel::look_at(const Vec3& eye, const Vec3& target, int width, int height,
                                 double horizontal_fov_rad) {
  const Vec3 forward = (target - eye).normalized();
  Vec3 up = Vec3::UnitZ();
  if (std::abs(forward.dot(up)) > 0.999) up = Vec3::UnitY();
  const Vec3 right = forward.cross(up).normalized();
  const Vec3 down = forward.cross(right).normalized();

  Mat3 rot;
  rot.col(0) = right;
  rot.col(1) = down;
  rot.col(2) = forward;

  CameraModel cam;
  cam.width = width;
  cam.height = height;
  cam.fx = cam.fy = 0.5 * width / std::tan(0.5 * horizontal_fov_rad);
  cam.cx = 0.5 * width;
  cam.cy = 0.5 * height;
  cam.extrinsic = Pose(Quat(rot), eye);
  return cam;
}

PointCloud render_cloud(const Scene& scene, const CameraModel& camera, double depth_noise_sigma,
                        uint64_t noise_seed) {
  if (!camera.valid()) throw std::invalid_argument("render_cloud: invalid camera");

  const Vec3 origin = camera.extrinsic.translation;
  Rng noise(noise_seed);

  PointCloud cloud;
  for (int v = 0; v < camera.height; ++v) {
    for (int u = 0; u < camera.width; ++u) {
      const Vec3 dir_cam{(u + 0.5 - camera.cx) / camera.fx, (v + 0.5 - camera.cy) / camera.fy,
                         1.0};
      const Vec3 dir = camera.extrinsic.rotate(dir_cam.normalized());

      double best_t = std::numeric_limits<double>::max();
      int best_instance = -1;
      Vec3 best_normal = Vec3::UnitZ();

      for (const Placement& p : scene.placements) {
        const auto hit = p.world_bvh.raycast(origin, dir);
        if (hit && hit->t < best_t) {
          best_t = hit->t;
          best_instance = p.instance_id;
          best_normal = p.world_mesh.triangle(hit->triangle).raw_normal().normalized();
        }
      }

      // Infinite table plane at z = table_height.
      if (dir.z() != 0.0) {
        const double t = (scene.table_height - origin.z()) / dir.z();
        if (t > 0.0 && t < best_t) {
          best_t = t;
          best_instance = kTableInstance;
          best_normal = Vec3::UnitZ();
        }
      }

      if (best_instance < 0) continue;
      if (depth_noise_sigma > 0.0) {
        // Box-Muller from the deterministic stream.
        const double u1 = std::max(noise.uniform(), 1e-300);
        const double u2 = noise.uniform();
        best_t += depth_noise_sigma * std::sqrt(-2.0 * std::log(u1)) *
                  std::cos(2.0 * M_PI * u2);
      }
      if (best_normal.dot(dir) > 0.0) best_normal = -best_normal;  // face the camera
      cloud.push(origin + best_t * dir, best_normal, best_instance);
    }
  }
  return cloud;
}

}  // namespace graspsynth
