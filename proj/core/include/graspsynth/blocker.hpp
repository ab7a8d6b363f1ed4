#pragma once

#include "graspsynth/cascade.hpp"

namespace graspsynth {

/// Observed cloud with object j removed: its points are relabeled to the
/// table (instance 0) and projected down to the table plane (z set to
/// table_height, x/y kept; normals, when present, become the table normal).
/// Every other point is untouched and the point count is preserved. Throws
/// when j is absent.
PointCloud hallucinate_removal(const PointCloud& cloud, int instance, double table_height);

/// Blocking benefit of removing object j for the given grasp set: mean over
/// grasps of collider(g, X) - collider(g, X_with_j_removed). Positive when
/// removal lowers collision scores. The collider must score from the cloud
/// argument (a cloud-independent scorer would always give 0). Throws on an
/// empty grasp set.
double blocking_score(int instance, const std::vector<Grasp>& grasps, const PointCloud& cloud,
                      const Scorer& collider, double table_height);

struct BlockerEntry {
  int instance_id = -1;
  double alpha = 0.0;
};

struct BlockerRanking {
  int target = -1;
  std::vector<BlockerEntry> ranked;  // descending alpha, ties by lower id
  std::vector<Grasp> grasps;         // the target grasps the scores refer to
};

/// Scores every non-target, non-table instance in the cloud.
BlockerRanking rank_blockers(const PointCloud& cloud, int target,
                             const std::vector<Grasp>& target_grasps, const Scorer& collider,
                             double table_height);

struct RemovalStep {
  int instance_id = -1;
  double alpha = 0.0;
  Pose grasp_pose;  // grasp chosen for extracting this blocker
};

struct RemovalPlan {
  bool success = false;
  std::vector<RemovalStep> steps;
  ScoredGrasp final_grasp;  // valid when success
};

/// Iteratively clears the way to the target: plan grasps; when none passes
/// the thresholds, remove the highest-alpha blocker from the cloud
/// (hallucinated) and retry, up to max_removals. Fails when the budget is
/// exhausted or no blocker improves anything.
RemovalPlan plan_removal(const PointCloud& cloud, int target, const GraspPipeline& pipeline,
                         int max_removals, double table_height, Rng& rng);

}  // namespace graspsynth
