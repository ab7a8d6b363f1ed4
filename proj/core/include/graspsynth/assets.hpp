#pragma once

#include <string>
#include <vector>

#include "graspsynth/pose.hpp"
#include "graspsynth/trimesh.hpp"

namespace graspsynth {

class Rng;

/// A resting orientation: applying `pose` to the mesh puts its lowest vertex
/// on the z = 0 plane.
struct StablePose {
  Pose pose;
  double weight = 0.0;
};

/// Rebuildable description of a procedural asset: category name plus the
/// factory's numeric parameters, enough to reconstruct the mesh exactly.
struct AssetDescriptor {
  std::string category;
  std::vector<double> params;
};

struct ObjectAsset {
  std::string asset_id;
  TriMesh mesh;
  std::vector<StablePose> stable_poses;  // weights sum to 1
  AssetDescriptor descriptor;
};

// Procedural primitives with analytically derived stable poses. Box stable
// poses are weighted by resting-face area; cylinders by base-disk area vs.
// side-contact strip; bowls and bottles use fixed upright-heavy weights.
ObjectAsset make_box_asset(const std::string& id, const Vec3& extent);
ObjectAsset make_cylinder_asset(const std::string& id, double radius, double height);
ObjectAsset make_bowl_asset(const std::string& id, double bottom_radius, double top_radius,
                            double height, double thickness);
ObjectAsset make_bottle_asset(const std::string& id, double body_radius, double body_height,
                              double neck_radius, double neck_height);

/// Builds an asset by category name ("box", "cylinder", "bowl", "bottle")
/// with dimensions drawn from per-category ranges.
ObjectAsset make_random_asset(const std::string& category, const std::string& id, Rng& rng);

/// Randomized library across all categories.
std::vector<ObjectAsset> procedural_asset_library(uint64_t seed, int count);

/// Fixed 15-asset held-out set (disjoint seed from the training library).
std::vector<ObjectAsset> heldout_asset_library();

/// Rebuilds an asset from its descriptor. Throws std::invalid_argument on
/// unknown categories or wrong parameter counts.
ObjectAsset make_asset(const AssetDescriptor& descriptor, const std::string& id);

}  // namespace graspsynth
