#include "graspsynth/assets.hpp"

#include <cmath>
#include <stdexcept>

#include "graspsynth/primitives.hpp"
#include "graspsynth/rng.hpp"

namespace graspsynth {

namespace {

// Resting pose for a given orientation: drop the rotated mesh onto z = 0.
StablePose resting(const TriMesh& mesh, const Quat& rotation, double weight) {
  double min_z = std::numeric_limits<double>::max();
  for (const Vec3& v : mesh.vertices) min_z = std::min(min_z, (rotation * v).z());
  return {Pose(rotation, Vec3(0.0, 0.0, -min_z)), weight};
}

void normalize_weights(std::vector<StablePose>& poses) {
  double total = 0.0;
  for (const StablePose& p : poses) total += p.weight;
  for (StablePose& p : poses) p.weight /= total;
}

}  // namespace

ObjectAsset make_box_asset(const std::string& id, const Vec3& extent) {
  ObjectAsset asset;
  asset.asset_id = id;
  asset.descriptor = {"box", {extent.x(), extent.y(), extent.z()}};
  asset.mesh = make_box(extent);
  const Quat flat = Quat::Identity();
  const Quat x_up(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitY()));
  const Quat y_up(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitX()));
  asset.stable_poses = {resting(asset.mesh, flat, extent.x() * extent.y()),
                        resting(asset.mesh, x_up, extent.y() * extent.z()),
                        resting(asset.mesh, y_up, extent.x() * extent.z())};
  normalize_weights(asset.stable_poses);
  return asset;
}

ObjectAsset make_cylinder_asset(const std::string& id, double radius, double height) {
  ObjectAsset asset;
  asset.asset_id = id;
  asset.descriptor = {"cylinder", {radius, height}};
  asset.mesh = make_cylinder(radius, height);
  const Quat upright = Quat::Identity();
  const Quat lying(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitX()));
  asset.stable_poses = {resting(asset.mesh, upright, M_PI * radius * radius),
                        resting(asset.mesh, lying, 2.0 * radius * height)};
  normalize_weights(asset.stable_poses);
  return asset;
}

ObjectAsset make_bowl_asset(const std::string& id, double bottom_radius, double top_radius,
                            double height, double thickness) {
  ObjectAsset asset;
  asset.asset_id = id;
  asset.descriptor = {"bowl", {bottom_radius, top_radius, height, thickness}};
  asset.mesh = make_bowl(bottom_radius, top_radius, height, thickness);
  const Quat upright = Quat::Identity();
  const Quat inverted(Eigen::AngleAxisd(M_PI, Vec3::UnitX()));
  asset.stable_poses = {resting(asset.mesh, upright, 0.8), resting(asset.mesh, inverted, 0.2)};
  normalize_weights(asset.stable_poses);
  return asset;
}

ObjectAsset make_bottle_asset(const std::string& id, double body_radius, double body_height,
                              double neck_radius, double neck_height) {
  ObjectAsset asset;
  asset.asset_id = id;
  asset.descriptor = {"bottle", {body_radius, body_height, neck_radius, neck_height}};
  asset.mesh = make_bottle(body_radius, body_height, neck_radius, neck_height);
  const Quat upright = Quat::Identity();
  const Quat lying(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitX()));
  asset.stable_poses = {resting(asset.mesh, upright, 0.6), resting(asset.mesh, lying, 0.4)};
  normalize_weights(asset.stable_poses);
  return asset;
}

ObjectAsset make_random_asset(const std::string& category, const std::string& id, Rng& rng) {
  if (category == "box")
    return make_box_asset(
        id, {rng.uniform(0.03, 0.09), rng.uniform(0.03, 0.09), rng.uniform(0.03, 0.09)});
  if (category == "cylinder")
    return make_cylinder_asset(id, rng.uniform(0.015, 0.04), rng.uniform(0.05, 0.14));
  if (category == "bowl") {
    const double top = rng.uniform(0.05, 0.08);
    return make_bowl_asset(id, rng.uniform(0.03, 0.045), top, rng.uniform(0.04, 0.07),
                           rng.uniform(0.006, 0.010));
  }
  if (category == "bottle")
    return make_bottle_asset(id, rng.uniform(0.02, 0.035), rng.uniform(0.08, 0.14),
                             rng.uniform(0.008, 0.015), rng.uniform(0.02, 0.04));
  throw std::invalid_argument("unknown asset category: " + category);
}

namespace {

std::vector<ObjectAsset> build_library(uint64_t seed, int count, const std::string& prefix) {
  static const char* kCategories[] = {"box", "cylinder", "bowl", "bottle"};
  Rng rng(seed);
  std::vector<ObjectAsset> lib;
  lib.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::string category = kCategories[i % 4];
    lib.push_back(make_random_asset(category, prefix + std::to_string(i) + "_" + category, rng));
  }
  return lib;
}

}  // namespace

std::vector<ObjectAsset> procedural_asset_library(uint64_t seed, int count) {
  return build_library(Rng::mix(seed, 0x11b7a5), count, "asset_");
}

std::vector<ObjectAsset> heldout_asset_library() {
  return build_library(0x8e1d07ULL, 15, "heldout_");
}

ObjectAsset make_asset(const AssetDescriptor& d, const std::string& id) {
  const auto need = [&](size_t n) {
    if (d.params.size() != n)
      throw std::invalid_argument("asset descriptor '" + d.category + "': wrong parameter count");
  };
  if (d.category == "box") {
    need(3);
    return make_box_asset(id, {d.params[0], d.params[1], d.params[2]});
  }
  if (d.category == "cylinder") {
    need(2);
    return make_cylinder_asset(id, d.params[0], d.params[1]);
  }
  if (d.category == "bowl") {
    need(4);
    return make_bowl_asset(id, d.params[0], d.params[1], d.params[2], d.params[3]);
  }
  if (d.category == "bottle") {
    need(4);
    return make_bottle_asset(id, d.params[0], d.params[1], d.params[2], d.params[3]);
  }
  throw std::invalid_argument("unknown asset category: " + d.category);
}

}  // namespace graspsynth
