#pragma once

#include <vector>

#include "graspsynth/grasp.hpp"
#include "graspsynth/gripper.hpp"
#include "graspsynth/pointcloud.hpp"
#include "graspsynth/scene.hpp"

namespace graspsynth {

class Rng;

/// Geometric baseline sampler: picks a random cloud point, approaches along
/// the negated surface normal from a random standoff, rolls uniformly about
/// the approach axis. Requires normals; throws on an empty cloud.
std::vector<Grasp> surface_normal_sampler(const PointCloud& object_cloud, int k,
                                          double standoff_min, double standoff_max, Rng& rng);

/// Composes the grasp with a local-frame perturbation: translation direction
/// uniform on the sphere with magnitude uniform in [0, max_translation],
/// rotation axis uniform with angle uniform in [0, max_rotation].
Grasp perturb(const Grasp& g, double max_translation, double max_rotation, Rng& rng);

struct HardNegativeParams {
  double max_translation = 0.02;
  double max_rotation = 15.0 * M_PI / 180.0;
  double far_margin = 0.0;  // expands the closing region for the emptiness test
  int attempts_per_positive = 4;
};

/// Perturbed copies of positive grasps, kept only when they collide with the
/// target (an object point inside the gripper body) or hold nothing (no
/// object point in the closing region expanded by far_margin).
std::vector<Grasp> hard_negatives(const std::vector<Grasp>& positives,
                                  const PointCloud& object_cloud, const GripperModel& gripper,
                                  const HardNegativeParams& params, Rng& rng);

/// Uniform poses over the workspace volume above the table, rejection
/// sampled until exact-collision-free against the whole scene. Throws
/// std::runtime_error when the rejection budget (100 attempts per grasp)
/// is exhausted.
std::vector<Grasp> free_space_grasps(const Scene& scene, const GripperModel& gripper, int n,
                                     Rng& rng);

/// Full-state reference set for one target: candidates sampled on the
/// target's mesh surface, quality labeled by the analytic success oracle on
/// the isolated object, collision labeled by the exact checker on the full
/// scene. Sets partition into G+/G- by quality.
std::vector<std::pair<Grasp, GraspLabel>> generate_reference_set(const Scene& scene,
                                                                 int target_instance,
                                                                 const GripperModel& gripper,
                                                                 int n_candidates,
                                                                 double friction_mu, Rng& rng);

}  // namespace graspsynth
