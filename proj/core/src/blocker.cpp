#include "graspsynth/blocker.hpp"

#include <algorithm>
#include <stdexcept>

#include "graspsynth/rng.hpp"

namespace graspsynth {

PointCloud hallucinate_removal(const PointCloud& cloud, int instance, double table_height) {
  // The table itself cannot be removed; ids below it are malformed. An id
  // with zero points yields the identity (a fully occluded object and an
  // absent one look the same in a cloud).
  if (instance <= kTableInstance)
    throw std::invalid_argument("hallucinate_removal: not a removable instance");

  const auto indices = cloud.instance_indices(instance);
  PointCloud out = cloud;
  for (int i : indices) {
    out.instance_ids[i] = kTableInstance;
    out.points[i].z() = table_height;
    if (out.has_normals()) out.normals[i] = Vec3::UnitZ();
  }
  return out;
}

double blocking_score(int instance, const std::vector<Grasp>& grasps, const PointCloud& cloud,
                      const Scorer& collider, double table_height) {
  if (grasps.empty()) throw std::invalid_argument("blocking_score: empty grasp set");

  const PointCloud removed = hallucinate_removal(cloud, instance, table_height);
  double total = 0.0;
  for (const Grasp& g : grasps)
    total += collider(g.pose, cloud) - collider(g.pose, removed);
  return total / static_cast<double>(grasps.size());
}

BlockerRanking rank_blockers(const PointCloud& cloud, int target,
                             const std::vector<Grasp>& target_grasps, const Scorer& collider,
                             double table_height) {
  BlockerRanking ranking;
  ranking.target = target;
  ranking.grasps = target_grasps;
  for (int instance : cloud.instances()) {
    if (instance == kTableInstance || instance == target) continue;
    ranking.ranked.push_back(
        {instance, blocking_score(instance, target_grasps, cloud, collider, table_height)});
  }
  std::sort(ranking.ranked.begin(), ranking.ranked.end(),
            [](const BlockerEntry& a, const BlockerEntry& b) {
              return a.alpha > b.alpha || (a.alpha == b.alpha && a.instance_id < b.instance_id);
            });
  return ranking;
}

RemovalPlan plan_removal(const PointCloud& cloud, int target, const GraspPipeline& pipeline,
                         int max_removals, double table_height, Rng& rng) {
  if (cloud.instance_indices(target).empty())
    throw std::invalid_argument("plan_removal: target not in cloud");

  ScorerContext ctx;
  ctx.gripper = pipeline.gripper;
  ctx.exclude_instance = target;
  const Scorer collider = make_scorer("soft_collision", ctx);

  RemovalPlan plan;
  PointCloud current = cloud;
  for (int round = 0; round <= max_removals; ++round) {
    const PlanOutcome outcome = plan_grasps(pipeline, current, target, rng);
    if (!outcome.accepted.empty()) {
      plan.success = true;
      plan.final_grasp = outcome.accepted.front();
      return plan;
    }
    if (round == max_removals) break;

    std::vector<Grasp> target_grasps;
    for (const ScoredGrasp& sg : outcome.candidates) target_grasps.push_back(sg.grasp);
    if (target_grasps.empty()) break;

    const BlockerRanking ranking =
        rank_blockers(current, target, target_grasps, collider, table_height);
    if (ranking.ranked.empty()) break;
    const BlockerEntry blocker = ranking.ranked.front();

    // A grasp to extract the blocker: best accepted, else best candidate.
    const PlanOutcome blocker_outcome = plan_grasps(pipeline, current, blocker.instance_id, rng);
    Pose blocker_pose;
    if (!blocker_outcome.accepted.empty()) {
      blocker_pose = blocker_outcome.accepted.front().grasp.pose;
    } else if (!blocker_outcome.candidates.empty()) {
      const auto best = std::max_element(
          blocker_outcome.candidates.begin(), blocker_outcome.candidates.end(),
          [](const ScoredGrasp& a, const ScoredGrasp& b) { return a.cascade < b.cascade; });
      blocker_pose = best->grasp.pose;
    }
    plan.steps.push_back({blocker.instance_id, blocker.alpha, blocker_pose});
    current = hallucinate_removal(current, blocker.instance_id, table_height);
  }
  return plan;
}

}  // namespace graspsynth
