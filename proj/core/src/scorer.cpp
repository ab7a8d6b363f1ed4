#include "graspsynth/scorer.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace graspsynth {

double antipodal_score(const Pose& g, const PointCloud& object_cloud,
                       const GripperModel& gripper, double friction_mu, double contact_band) {
  if (!object_cloud.has_normals())
    throw std::invalid_argument("antipodal_score: cloud carries no normals");

  const Pose to_local = inverse(g);
  const double cone_cos = 1.0 / std::sqrt(1.0 + friction_mu * friction_mu);

  // Closing-region points in the gripper frame (closing axis is y).
  std::vector<double> y_pos;
  std::vector<double> n_along;
  std::vector<double> n_approach;
  for (size_t i = 0; i < object_cloud.size(); ++i) {
    if (object_cloud.source_flags[i] != 0) continue;
    const Vec3 local = to_local.apply(object_cloud.points[i]);

    // Too deep: object inside the gripper body.
    for (const Aabb& box : gripper.body_boxes)
      if (box.contains(local)) return 0.0;

    if (!gripper.closing_region.contains(local)) continue;
    const Vec3 n = to_local.rotate(object_cloud.normals[i]).normalized();
    y_pos.push_back(local.y());
    n_along.push_back(n.y());
    n_approach.push_back(n.z());
  }
  if (y_pos.empty()) return 0.0;

  // The jaws first meet the extremal-y surfaces: judge the contact bands
  // there. Band quality is the fraction of band points whose normal lies in
  // the friction cone.
  const double y_hi = *std::max_element(y_pos.begin(), y_pos.end());
  const double y_lo = *std::min_element(y_pos.begin(), y_pos.end());
  int hi_total = 0, hi_good = 0, lo_total = 0, lo_good = 0;
  for (size_t i = 0; i < y_pos.size(); ++i) {
    const bool aligned = std::abs(n_along[i]) >= cone_cos;
    if (y_pos[i] >= y_hi - contact_band) {
      ++hi_total;
      if (aligned) ++hi_good;
    }
    if (y_pos[i] <= y_lo + contact_band) {
      ++lo_total;
      if (aligned) ++lo_good;
    }
  }
  const double q_hi = hi_total ? static_cast<double>(hi_good) / hi_total : 0.0;
  const double q_lo = lo_total ? static_cast<double>(lo_good) / lo_total : 0.0;

  // Contacts centered between the jaws are reachable by both fingers;
  // grasps that graze one edge of the region are not.
  const double half_width = 0.5 * (gripper.closing_region.max.y() - gripper.closing_region.min.y());
  const double y_mid = 0.5 * (y_hi + y_lo);
  const double centering = 0.5 + 0.5 * std::max(0.0, 1.0 - std::abs(y_mid) / half_width);

  // Opposition confirmed by two geometrically distinct bands scores fully;
  // a sub-millimeter slab shows a single surface, so whether the unseen
  // opposing face supports the grasp stays unconfirmed (all a single depth
  // view can show of a flat face) and keeps reduced credit.
  double band_score;
  if (y_hi - y_lo <= 0.001) {
    band_score = 0.6 * std::max(q_hi, q_lo) * centering;
  } else {
    const double strong = std::max(q_hi, q_lo);
    const double weak = std::min(q_hi, q_lo);
    band_score = strong * (0.6 + 0.4 * weak) * centering;
  }

  // Frontal channel: a surface looking back along the approach axis and
  // sitting between the jaws can be pinched across its unseen lateral
  // faces. Neither contact is observed from a head-on view, so this grants
  // only the unconfirmed-opposition credit.
  double frontal_lo = std::numeric_limits<double>::max();
  double frontal_hi = std::numeric_limits<double>::lowest();
  for (size_t i = 0; i < y_pos.size(); ++i) {
    if (n_approach[i] > -M_SQRT1_2) continue;
    frontal_lo = std::min(frontal_lo, y_pos[i]);
    frontal_hi = std::max(frontal_hi, y_pos[i]);
  }
  double frontal_score = 0.0;
  if (frontal_lo <= frontal_hi) {
    const double mid = 0.5 * (frontal_lo + frontal_hi);
    const double cent = 0.5 + 0.5 * std::max(0.0, 1.0 - std::abs(mid) / half_width);
    frontal_score = 0.6 * cent;
  }
  return std::max(band_score, frontal_score);
}

Scorer make_scorer(const std::string& name, const ScorerContext& ctx) {
  if (!ctx.gripper) throw std::invalid_argument("make_scorer: gripper required");
  const GripperModel* gripper = ctx.gripper;

  if (name == "antipodal") {
    const double mu = ctx.friction_mu;
    return [gripper, mu](const Pose& g, const PointCloud& cloud) {
      return antipodal_score(g, cloud, *gripper, mu);
    };
  }
  if (name == "soft_collision") {
    const auto exclude = ctx.exclude_instance;
    const SoftCollisionParams params = ctx.soft_params;
    return [gripper, exclude, params](const Pose& g, const PointCloud& cloud) {
      return soft_collision_score(*gripper, g, cloud, exclude, params);
    };
  }
  if (name == "voxel_binary") {
    if (!ctx.voxels) throw std::invalid_argument("voxel_binary scorer needs a voxel grid");
    const VoxelGrid* grid = ctx.voxels;
    return [gripper, grid](const Pose& g, const PointCloud&) {
      return voxel_collision(*gripper, g, *grid) ? 1.0 : 0.0;
    };
  }
  if (name == "exact_binary") {
    if (!ctx.scene) throw std::invalid_argument("exact_binary scorer needs the scene");
    const Scene* scene = ctx.scene;
    return [gripper, scene](const Pose& g, const PointCloud&) {
      return exact_collision(*gripper, g, *scene).colliding ? 1.0 : 0.0;
    };
  }
  throw std::invalid_argument("unknown scorer: " + name);
}

std::vector<std::string> scorer_names() {
  return {"antipodal", "soft_collision", "voxel_binary", "exact_binary"};
}

}  // namespace graspsynth
