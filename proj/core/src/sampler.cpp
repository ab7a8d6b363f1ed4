#include "graspsynth/sampler.hpp"

#include <stdexcept>

#include "graspsynth/collision.hpp"
#include "graspsynth/metrics.hpp"
#include "graspsynth/rng.hpp"

namespace graspsynth {

namespace {

// Rotation taking the gripper approach axis (+z) onto `approach`, rolled by
// `roll` about it. The reference tangent is deterministic in `approach`.
Quat approach_frame(const Vec3& approach, double roll) {
  const Vec3 ref = std::abs(approach.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 x0 = (ref - ref.dot(approach) * approach).normalized();
  const Vec3 x = std::cos(roll) * x0 + std::sin(roll) * approach.cross(x0);
  const Vec3 y = approach.cross(x);
  Mat3 rot;
  rot.col(0) = x;
  rot.col(1) = y;
  rot.col(2) = approach;
  return Quat(rot);
}

}  // namespace

std::vector<Grasp> surface_normal_sampler(const PointCloud& object_cloud, int k,
                                          double standoff_min, double standoff_max, Rng& rng) {
  if (k < 0) throw std::invalid_argument("surface_normal_sampler: negative k");
  if (k == 0) return {};
  if (object_cloud.empty()) throw std::invalid_argument("surface_normal_sampler: empty cloud");
  if (!object_cloud.has_normals())
    throw std::invalid_argument("surface_normal_sampler: cloud carries no normals");

  std::vector<Grasp> grasps;
  grasps.reserve(k);
  for (int i = 0; i < k; ++i) {
    const int pick = rng.uniform_int(static_cast<int>(object_cloud.size()));
    const Vec3 point = object_cloud.points[pick];
    const Vec3 normal = object_cloud.normals[pick].normalized();
    const double standoff = rng.uniform(standoff_min, standoff_max);
    const double roll = rng.uniform(0.0, 2.0 * M_PI);

    Grasp g;
    g.source = GraspSource::surface_normal;
    g.pose = Pose(approach_frame(-normal, roll), point + standoff * normal);
    grasps.push_back(g);
  }
  return grasps;
}

Grasp perturb(const Grasp& g, double max_translation, double max_rotation, Rng& rng) {
  const Vec3 dt = rng.uniform(0.0, max_translation) * rng.unit_vector();
  const Vec3 axis = rng.unit_vector();
  const double angle = rng.uniform(0.0, max_rotation);
  const Quat dq(Eigen::AngleAxisd(angle, axis));

  Grasp out;
  out.source = GraspSource::perturbed;
  out.pose = compose(g.pose, Pose(dq, dt));
  return out;
}

std::vector<Grasp> hard_negatives(const std::vector<Grasp>& positives,
                                  const PointCloud& object_cloud, const GripperModel& gripper,
                                  const HardNegativeParams& params, Rng& rng) {
  if (positives.empty()) throw std::invalid_argument("hard_negatives: no positives given");

  std::vector<Grasp> out;
  for (const Grasp& positive : positives) {
    for (int attempt = 0; attempt < params.attempts_per_positive; ++attempt) {
      const Grasp candidate = perturb(positive, params.max_translation, params.max_rotation, rng);
      const Pose to_local = inverse(candidate.pose);
      const Aabb far_region = gripper.closing_region.expanded(params.far_margin);

      bool collides = false;
      bool holds_object = false;
      for (size_t i = 0; i < object_cloud.size(); ++i) {
        if (object_cloud.source_flags[i] != 0) continue;
        const Vec3 local = to_local.apply(object_cloud.points[i]);
        for (const Aabb& box : gripper.body_boxes)
          if (box.contains(local)) {
            collides = true;
            break;
          }
        if (far_region.contains(local)) holds_object = true;
        if (collides) break;
      }
      if (collides || !holds_object) out.push_back(candidate);
    }
  }
  return out;
}

std::vector<Grasp> free_space_grasps(const Scene& scene, const GripperModel& gripper, int n,
                                     Rng& rng) {
  const Aabb workspace{{-scene.table_extent, -scene.table_extent, scene.table_height},
                       {scene.table_extent, scene.table_extent, scene.table_height + 0.4}};
  std::vector<Grasp> out;
  out.reserve(n);
  int budget = 100 * std::max(n, 1);
  while (static_cast<int>(out.size()) < n) {
    if (budget-- <= 0) throw std::runtime_error("free_space_grasps: rejection budget exhausted");
    const Pose pose{rng.rotation(), rng.in_box(workspace)};
    if (exact_collision(gripper, pose, scene).colliding) continue;
    Grasp g;
    g.source = GraspSource::free_space;
    g.pose = pose;
    out.push_back(g);
  }
  return out;
}

std::vector<std::pair<Grasp, GraspLabel>> generate_reference_set(const Scene& scene,
                                                                 int target_instance,
                                                                 const GripperModel& gripper,
                                                                 int n_candidates,
                                                                 double friction_mu, Rng& rng) {
  const Placement* target = scene.find(target_instance);
  if (!target) throw std::invalid_argument("generate_reference_set: target not in scene");

  // Isolated view of the target for object-centric quality labels.
  Scene isolated;
  isolated.table_height = scene.table_height;
  isolated.table_extent = scene.table_extent;
  place_fixed(isolated, target->asset, target->pose);
  const int isolated_id = isolated.placements.back().instance_id;

  const SurfacePoints surf = sample_surface(target->world_mesh, n_candidates, rng);

  std::vector<std::pair<Grasp, GraspLabel>> out;
  out.reserve(n_candidates);
  for (size_t i = 0; i < surf.points.size(); ++i) {
    const double standoff = rng.uniform(0.005, 0.04);
    const double roll = rng.uniform(0.0, 2.0 * M_PI);
    Grasp g;
    g.source = GraspSource::surface_normal;
    g.pose = Pose(approach_frame(-surf.normals[i], roll),
                  surf.points[i] + standoff * surf.normals[i]);

    GraspLabel label;
    const bool quality = success_oracle(g.pose, isolated, isolated_id, gripper, friction_mu);
    label.quality = quality ? GraspQuality::positive : GraspQuality::negative;
    label.collision = exact_collision(gripper, g.pose, scene).colliding;
    label.set = quality ? GraspSet::g_plus : GraspSet::g_minus;
    out.emplace_back(g, label);
  }
  return out;
}

}  // namespace graspsynth
