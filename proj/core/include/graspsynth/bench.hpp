#pragma once

#include <map>
#include <string>

#include "graspsynth/cascade.hpp"
#include "graspsynth/metrics.hpp"
#include "graspsynth/render.hpp"

namespace graspsynth {

/// One ablation variant: how candidates are scored for the sweep.
///   sampler:  "surface_normal" | "external" (caller-supplied grasps)
///   collider: "none" | "voxel" | "voxel_no_target" | "soft" | "exact"
///   labeling: "cascaded" (evaluator on the object crop x collision-free
///             term) | "single_stage" (one evaluator on the whole crop,
///             no instance separation)
struct VariantSpec {
  std::string name;
  std::string sampler = "surface_normal";
  std::string collider = "soft";
  std::string labeling = "cascaded";
};

struct BenchConfig {
  int scenes = 20;
  int objects_min = 4;
  int objects_max = 8;
  uint64_t seed = 1;
  int grasps_per_scene = 120;
  int reference_candidates = 400;
  int mh_iterations = 20;
  double friction_mu = 0.5;
  int crop_points = 4096;
  double crop_box_size = 0.40;
  std::vector<std::pair<Grasp, double>> external_grasps;  // for sampler = "external"
};

struct SceneOutcome {
  int scene_index = 0;
  int target_instance = 0;
  int n_candidates = 0;
  int n_reference_positives = 0;
  // Operating points on the common threshold grid, (coverage, success).
  std::vector<std::pair<double, double>> operating_points;
};

struct VariantResult {
  std::string name;
  std::vector<SceneOutcome> scenes;
  SuccessCoverageCurve mean_curve;  // thresholds averaged across scenes
  double auc = 0.0;
};

struct BenchmarkReport {
  BenchConfig config;
  std::vector<VariantResult> variants;
  double wall_clock_seconds = 0.0;  // reported on stderr, not serialized
};

/// Shared threshold grid for the operating points (descending subsets as
/// the threshold falls).
std::vector<double> threshold_grid();

/// Runs every variant over the same generated scenes, grasp candidates and
/// reference sets; deterministic given the seed. Throws
/// std::invalid_argument on an unknown variant field.
BenchmarkReport run_ablation(const BenchConfig& config,
                             const std::vector<VariantSpec>& variants,
                             const GripperModel& gripper);

/// Paired bootstrap over scenes: fraction of resamples where the first
/// variant's mean-curve AUC exceeds the second's, plus the 2.5th percentile
/// of the AUC difference.
struct PairedBootstrap {
  double win_fraction = 0.0;
  double diff_p2_5 = 0.0;
  double diff_mean = 0.0;
};
PairedBootstrap bootstrap_auc_difference(const VariantResult& a, const VariantResult& b,
                                         int resamples, uint64_t seed);

}  // namespace graspsynth
