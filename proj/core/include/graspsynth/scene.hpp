#pragma once

#include <optional>
#include <vector>

#include "graspsynth/assets.hpp"
#include "graspsynth/bvh.hpp"
#include "graspsynth/pose.hpp"

namespace graspsynth {

class Rng;

/// One placed object. World-space mesh and BVH are cached at placement time;
/// the scene is immutable once built, so they stay valid.
struct Placement {
  ObjectAsset asset;
  Pose pose;
  int instance_id = 0;  // >= 1; 0 is the table
  TriMesh world_mesh;
  Bvh world_bvh;
};

/// Cluttered tabletop: placed objects over an infinite table plane at
/// table_height. Placement sampling is confined to a square of half-extent
/// table_extent around the origin.
struct Scene {
  double table_height = 0.0;
  double table_extent = 0.35;
  std::vector<Placement> placements;

  const Placement* find(int instance_id) const;
  int next_instance_id() const;

  /// Placement sampling region (z = table_height plane square).
  Aabb table_region() const {
    return {{-table_extent, -table_extent, table_height},
            {table_extent, table_extent, table_height}};
  }
};

/// Draws a stable pose by weight, applies a uniform random yaw about z and a
/// uniform translation within the table region. Throws std::invalid_argument
/// if the asset has no stable poses.
Pose sample_stable_pose(const ObjectAsset& asset, const Aabb& table_region, Rng& rng);

/// Adds the asset at a sampled pose that collides with nothing already
/// placed; retries up to max_attempts. Returns the new instance id, or
/// nullopt if every attempt was rejected (scene unchanged).
std::optional<int> place_with_rejection(Scene& scene, const ObjectAsset& asset, int max_attempts,
                                        Rng& rng);

/// Appends a placement at a fixed pose without collision checking. For
/// scripted test scenes; the caller owns the no-intersection invariant.
int place_fixed(Scene& scene, const ObjectAsset& asset, const Pose& pose);

/// True if the posed body intersects any existing placement.
bool collides_with_scene(const Scene& scene, const Bvh& local_bvh, const Pose& pose);

}  // namespace graspsynth
