#pragma once

#include <optional>

#include "graspsynth/gripper.hpp"
#include "graspsynth/scene.hpp"
#include "graspsynth/voxelgrid.hpp"

namespace graspsynth {

/// Outcome of the ground-truth collision query. Exact surface contact
/// counts as colliding.
struct CollisionResult {
  bool colliding = false;
  double min_distance = std::numeric_limits<double>::infinity();  // valid when !colliding
  std::optional<std::pair<int, int>> witness;  // (gripper triangle, scene triangle or -1)
  int witness_instance = -1;                   // instance hit; 0 = table
};

/// Full-state collision check: gripper body mesh at pose g against every
/// placed mesh and the table plane, optionally ignoring one instance.
/// Triangle-exact via BVH-vs-BVH traversal.
CollisionResult exact_collision(const GripperModel& gripper, const Pose& g, const Scene& scene,
                                std::optional<int> exclude_instance = std::nullopt);

/// Heuristic check: transformed gripper body triangles against the occupied
/// voxel cubes (closed triangle-box tests).
bool voxel_collision(const GripperModel& gripper, const Pose& g, const VoxelGrid& grid);

struct SoftCollisionParams {
  double clearance_radius = 0.01;  // beyond this, the score is exactly 0
  double slope = 1.0;
};

/// Smooth clutter-collision surrogate in [0, 1]. Deterministic; grows with
/// the number of cloud points inside the gripper body and with shrinking
/// clearance; exactly 0 when the nearest considered point is farther than
/// the clearance radius. Gripper-indicator points (source_flag = 1) and the
/// excluded instance are ignored.
double soft_collision_score(const GripperModel& gripper, const Pose& g, const PointCloud& cloud,
                            std::optional<int> exclude_instance = std::nullopt,
                            const SoftCollisionParams& params = {});

}  // namespace graspsynth
