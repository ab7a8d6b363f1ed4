#include "graspsynth/scene.hpp"

#include <stdexcept>

#include "graspsynth/rng.hpp"

namespace graspsynth {

const Placement* Scene::find(int instance_id) const {
  for (const Placement& p : placements)
    if (p.instance_id == instance_id) return &p;
  return nullptr;
}

int Scene::next_instance_id() const {
  int next = 1;
  for (const Placement& p : placements) next = std::max(next, p.instance_id + 1);
  return next;
}

Pose sample_stable_pose(const ObjectAsset& asset, const Aabb& table_region, Rng& rng) {
  if (asset.stable_poses.empty())
    throw std::invalid_argument("sample_stable_pose: asset has no stable poses");

  const double u = rng.uniform();
  double acc = 0.0;
  const StablePose* chosen = &asset.stable_poses.back();
  for (const StablePose& sp : asset.stable_poses) {
    acc += sp.weight;
    if (u < acc) {
      chosen = &sp;
      break;
    }
  }

  const double yaw = rng.uniform(0.0, 2.0 * M_PI);
  const double x = rng.uniform(table_region.min.x(), table_region.max.x());
  const double y = rng.uniform(table_region.min.y(), table_region.max.y());
  // Yaw about z preserves the resting height.
  const Quat rotation = Quat(Eigen::AngleAxisd(yaw, Vec3::UnitZ())) * chosen->pose.rotation;
  return Pose(rotation, {x, y, chosen->pose.translation.z() + table_region.min.z()});
}

bool collides_with_scene(const Scene& scene, const Bvh& local_bvh, const Pose& pose) {
  for (const Placement& p : scene.placements)
    if (bvh_collide(local_bvh, pose, p.world_bvh, Pose::identity())) return true;
  return false;
}

int place_fixed(Scene& scene, const ObjectAsset& asset, const Pose& pose) {
  Placement placement;
  placement.asset = asset;
  placement.pose = pose;
  placement.instance_id = scene.next_instance_id();
  placement.world_mesh = asset.mesh.transformed(pose);
  placement.world_bvh = Bvh(placement.world_mesh);
  scene.placements.push_back(std::move(placement));
  return scene.placements.back().instance_id;
}

std::optional<int> place_with_rejection(Scene& scene, const ObjectAsset& asset, int max_attempts,
                                        Rng& rng) {
  const Bvh local_bvh(asset.mesh);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const Pose pose = sample_stable_pose(asset, scene.table_region(), rng);
    if (collides_with_scene(scene, local_bvh, pose)) continue;
    return place_fixed(scene, asset, pose);
  }
  return std::nullopt;
}

}  // namespace graspsynth
