#pragma once

#include <vector>

#include "graspsynth/grasp.hpp"
#include "graspsynth/scorer.hpp"

namespace graspsynth {

class Rng;

struct CascadeConfig {
  double evaluator_threshold = 0.5;
  double collision_threshold = 0.5;
  int mh_iterations = 20;
  double mh_translation_step = 0.01;                 // +- per axis, meters
  double mh_rotation_step = 5.0 * M_PI / 180.0;      // +- per axis, radians
  int n_samples = 200;
};

/// Cascade combination: object-centric success times clutter-centric
/// collision-free probability.
inline double cascade_score(double evaluator, double collider) {
  return evaluator * (1.0 - collider);
}

double cascade_score(const Pose& g, const PointCloud& object_cloud,
                     const PointCloud& scene_cloud, const Scorer& evaluator,
                     const Scorer& collider);

struct ScoredGrasp {
  Grasp grasp;
  double evaluator_score = 0.0;
  double collision_score = 0.0;
  double cascade = 0.0;
};

/// Drops grasps that miss either threshold (evaluator below, collision
/// above), sorts the rest by cascade score descending; ties keep the lower
/// input index.
std::vector<ScoredGrasp> filter_and_rank(const std::vector<ScoredGrasp>& grasps,
                                         const CascadeConfig& config);

/// Single-stage set membership: positive only if object-quality positive
/// and collision-free; every other combination is negative.
GraspLabel single_stage_label(GraspQuality quality, bool collides);

/// Metropolis-Hastings pose refinement against a scorer conditioned on a
/// fixed cloud. Returns the chain including the start (length
/// iterations + 1); rejected proposals repeat the current pose. Proposals
/// are uniform in the local step box; acceptance is min(1, s'/s), taken as
/// 1 when the current score is 0 and the proposal improves on it. One
/// uniform draw decides every step, so acceptance depends only on score
/// ratios (invariant to positive rescaling of the scorer).
std::vector<Pose> mh_refine(const Pose& start, const std::function<double(const Pose&)>& score,
                            int iterations, double translation_step, double rotation_step,
                            Rng& rng);

/// End-to-end target-driven grasp planning over a rendered scene cloud:
/// crop, sample on the object crop, refine, score, threshold, rank.
struct GraspPipeline {
  const GripperModel* gripper = nullptr;
  CascadeConfig config;
  std::string collider = "soft_collision";  // scorer name
  double friction_mu = 0.5;
  double crop_box_size = 0.40;
  double crop_center_noise = 0.0;
  int crop_points = 4096;
  double standoff_min = 0.005;
  double standoff_max = 0.04;
  int voxel_points_per_object = 100;
  double voxel_size = 0.02;
  const Scene* full_state = nullptr;  // only for the exact_binary collider
};

struct PlanOutcome {
  std::vector<ScoredGrasp> candidates;  // every refined, scored sample
  std::vector<ScoredGrasp> accepted;    // thresholded and ranked
};

PlanOutcome plan_grasps(const GraspPipeline& pipeline, const PointCloud& scene_cloud,
                        int target_instance, Rng& rng);

}  // namespace graspsynth
