#include "graspsynth/cascade.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "graspsynth/rng.hpp"
#include "graspsynth/sampler.hpp"
#include "graspsynth/segment.hpp"

namespace graspsynth {

double cascade_score(const Pose& g, const PointCloud& object_cloud,
                     const PointCloud& scene_cloud, const Scorer& evaluator,
                     const Scorer& collider) {
  return cascade_score(evaluator(g, object_cloud), collider(g, scene_cloud));
}

std::vector<ScoredGrasp> filter_and_rank(const std::vector<ScoredGrasp>& grasps,
                                         const CascadeConfig& config) {
  std::vector<int> order;
  for (size_t i = 0; i < grasps.size(); ++i) {
    if (grasps[i].evaluator_score < config.evaluator_threshold) continue;
    if (grasps[i].collision_score > config.collision_threshold) continue;
    order.push_back(static_cast<int>(i));
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return grasps[a].cascade > grasps[b].cascade;
  });
  std::vector<ScoredGrasp> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(grasps[i]);
  return out;
}

GraspLabel single_stage_label(GraspQuality quality, bool collides) {
  GraspLabel label;
  label.collision = collides;
  const bool positive = quality == GraspQuality::positive && !collides;
  label.quality = positive ? GraspQuality::positive : GraspQuality::negative;
  label.set = positive ? GraspSet::g_plus : GraspSet::g_minus;
  return label;
}

std::vector<Pose> mh_refine(const Pose& start, const std::function<double(const Pose&)>& score,
                            int iterations, double translation_step, double rotation_step,
                            Rng& rng) {
  std::vector<Pose> chain;
  chain.reserve(iterations + 1);
  chain.push_back(start);

  Pose current = start;
  double current_score = score(start);
  for (int it = 0; it < iterations; ++it) {
    const Vec3 dt{rng.uniform(-translation_step, translation_step),
                  rng.uniform(-translation_step, translation_step),
                  rng.uniform(-translation_step, translation_step)};
    const Vec3 dr{rng.uniform(-rotation_step, rotation_step),
                  rng.uniform(-rotation_step, rotation_step),
                  rng.uniform(-rotation_step, rotation_step)};
    const double angle = dr.norm();
    const Quat dq = angle > 0.0 ? Quat(Eigen::AngleAxisd(angle, dr / angle)) : Quat::Identity();
    const Pose proposal = compose(current, Pose(dq, dt));

    const double proposal_score = score(proposal);
    double accept;
    if (current_score == 0.0)
      accept = proposal_score > 0.0 ? 1.0 : 0.0;
    else
      accept = std::min(1.0, proposal_score / current_score);

    // Always consume one draw so the decision sequence depends only on the
    // acceptance ratios.
    if (rng.uniform() < accept) {
      current = proposal;
      current_score = proposal_score;
    }
    chain.push_back(current);
  }
  return chain;
}

PlanOutcome plan_grasps(const GraspPipeline& pipeline, const PointCloud& scene_cloud,
                        int target_instance, Rng& rng) {
  if (!pipeline.gripper) throw std::invalid_argument("plan_grasps: gripper not set");
  const GripperModel& gripper = *pipeline.gripper;

  const CropResult crop = crop_target(scene_cloud, target_instance, pipeline.crop_box_size,
                                      pipeline.crop_center_noise, pipeline.crop_points, rng);

  ScorerContext ctx;
  ctx.gripper = &gripper;
  ctx.friction_mu = pipeline.friction_mu;
  ctx.exclude_instance = target_instance;
  ctx.scene = pipeline.full_state;
  VoxelGrid grid;
  if (pipeline.collider == "voxel_binary") {
    grid = voxelize_scene(crop.scene_crop, pipeline.voxel_points_per_object, pipeline.voxel_size,
                          false, target_instance);
    ctx.voxels = &grid;
  }
  const Scorer evaluator = make_scorer("antipodal", ctx);
  const Scorer collider = make_scorer(pipeline.collider, ctx);

  std::vector<Grasp> samples =
      surface_normal_sampler(crop.object_crop, pipeline.config.n_samples, pipeline.standoff_min,
                             pipeline.standoff_max, rng);

  PlanOutcome outcome;
  outcome.candidates.reserve(samples.size());
  const auto evaluate = [&](const Pose& g) { return evaluator(g, crop.object_crop); };
  for (const Grasp& sample : samples) {
    const auto chain =
        mh_refine(sample.pose, evaluate, pipeline.config.mh_iterations,
                  pipeline.config.mh_translation_step, pipeline.config.mh_rotation_step, rng);
    ScoredGrasp scored;
    scored.grasp = {chain.back(), sample.source};
    scored.evaluator_score = evaluator(scored.grasp.pose, crop.object_crop);
    scored.collision_score = collider(scored.grasp.pose, crop.scene_crop);
    scored.cascade = cascade_score(scored.evaluator_score, scored.collision_score);
    outcome.candidates.push_back(scored);
  }
  outcome.accepted = filter_and_rank(outcome.candidates, pipeline.config);
  return outcome;
}

}  // namespace graspsynth
