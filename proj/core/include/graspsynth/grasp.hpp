#pragma once

#include "graspsynth/pose.hpp"

namespace graspsynth {

enum class GraspSource { surface_normal, external, perturbed, free_space };

/// Object-centric quality verdict (stable grasp on the isolated object).
enum class GraspQuality { positive, negative };

/// Reference-set membership used for training-data export.
enum class GraspSet { g_plus, g_minus, g_hard_negative, g_free };

struct Grasp {
  Pose pose;
  GraspSource source = GraspSource::external;
};

struct GraspLabel {
  GraspQuality quality = GraspQuality::negative;
  bool collision = false;
  GraspSet set = GraspSet::g_minus;
};

/// Set-membership consistency: hard negatives are negative, free-space
/// grasps are collision-free.
inline bool label_valid(const GraspLabel& label) {
  if (label.set == GraspSet::g_hard_negative && label.quality != GraspQuality::negative)
    return false;
  if (label.set == GraspSet::g_free && label.collision) return false;
  return true;
}

}  // namespace graspsynth
