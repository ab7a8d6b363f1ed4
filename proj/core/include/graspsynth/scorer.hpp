#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graspsynth/collision.hpp"
#include "graspsynth/gripper.hpp"

namespace graspsynth {

/// Deterministic grasp scorer: (pose, cloud) -> probability in [0, 1].
/// Implementations must be safe for concurrent read-only evaluation.
using Scorer = std::function<double(const Pose&, const PointCloud&)>;

/// Object-centric grasp quality from contact geometry. The jaws meet the
/// object at the extremal closing-axis surfaces; each contact band (within
/// contact_band of the extreme) is scored by how deep its normals sit in
/// the friction cone (half-angle atan(mu)) of the closing axis, and the two
/// bands combine as strong * (0.5 + 0.5 * weak). Opposition confirmed by
/// two distinct bands scores fully; a single observed surface (all a single
/// depth view can show of a face) keeps half credit. Zero when the closing
/// region is empty, when no band contact is cone-aligned, or when any
/// object point penetrates the gripper body (grasp too deep). Requires
/// normals.
double antipodal_score(const Pose& g, const PointCloud& object_cloud,
                       const GripperModel& gripper, double friction_mu,
                       double contact_band = 0.005);

/// Context for building named scorers.
struct ScorerContext {
  const GripperModel* gripper = nullptr;
  const Scene* scene = nullptr;          // exact_binary
  const VoxelGrid* voxels = nullptr;     // voxel_binary
  std::optional<int> exclude_instance;   // soft_collision
  double friction_mu = 0.5;
  SoftCollisionParams soft_params;
};

/// Scorer registry, keyed by name so configurations can select variants:
///   "antipodal"      evaluator, needs gripper
///   "soft_collision" collider, needs gripper
///   "voxel_binary"   collider, needs gripper + voxels
///   "exact_binary"   collider, needs gripper + scene (full state)
/// Throws std::invalid_argument for unknown names or missing context.
Scorer make_scorer(const std::string& name, const ScorerContext& ctx);

std::vector<std::string> scorer_names();

}  // namespace graspsynth
