#include "graspsynth/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "graspsynth/collision.hpp"
#include "graspsynth/rng.hpp"
#include "graspsynth/sampler.hpp"
#include "graspsynth/segment.hpp"

namespace graspsynth {

namespace {

struct SceneData {
  Scene scene;
  PointCloud cloud;
  int target = -1;
  CropResult crop;
  std::vector<Grasp> reference_positives;
  std::vector<Grasp> candidates;
  std::vector<bool> oracle_success;  // per candidate, full-scene verdict
};

void validate_variant(const VariantSpec& v) {
  if (v.sampler != "surface_normal" && v.sampler != "external")
    throw std::invalid_argument("run_ablation: unknown sampler '" + v.sampler + "'");
  if (v.collider != "none" && v.collider != "voxel" && v.collider != "voxel_no_target" &&
      v.collider != "soft" && v.collider != "exact")
    throw std::invalid_argument("run_ablation: unknown collider '" + v.collider + "'");
  if (v.labeling != "cascaded" && v.labeling != "single_stage")
    throw std::invalid_argument("run_ablation: unknown labeling '" + v.labeling + "'");
}

// Scores one candidate under a variant. Grids are prebuilt per scene.
double variant_score(const VariantSpec& v, const SceneData& data, const Pose& g,
                     const GripperModel& gripper, double mu, const VoxelGrid& grid_full,
                     const VoxelGrid& grid_no_target) {
  const double evaluator = v.labeling == "single_stage"
                               ? antipodal_score(g, data.crop.scene_crop, gripper, mu)
                               : antipodal_score(g, data.crop.object_crop, gripper, mu);
  if (v.labeling == "single_stage") return evaluator;

  double collider = 0.0;
  if (v.collider == "voxel")
    collider = voxel_collision(gripper, g, grid_full) ? 1.0 : 0.0;
  else if (v.collider == "voxel_no_target")
    collider = voxel_collision(gripper, g, grid_no_target) ? 1.0 : 0.0;
  else if (v.collider == "soft")
    collider = soft_collision_score(gripper, g, data.crop.scene_crop, data.target);
  else if (v.collider == "exact")
    collider = exact_collision(gripper, g, data.scene).colliding ? 1.0 : 0.0;
  return cascade_score(evaluator, collider);
}

}  // namespace

std::vector<double> threshold_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  return grid;
}

BenchmarkReport run_ablation(const BenchConfig& config, const std::vector<VariantSpec>& variants,
                             const GripperModel& gripper) {
  for (const VariantSpec& v : variants) validate_variant(v);
  const auto t_start = std::chrono::steady_clock::now();

  const auto library = heldout_asset_library();
  const auto taus = threshold_grid();

  BenchmarkReport report;
  report.config = config;
  report.variants.resize(variants.size());
  for (size_t vi = 0; vi < variants.size(); ++vi) report.variants[vi].name = variants[vi].name;

  Rng root(config.seed);
  for (int s = 0; s < config.scenes; ++s) {
    Rng rng = root.fork(s);

    SceneData data;
    const int n_objects = config.objects_min + rng.uniform_int(config.objects_max -
                                                               config.objects_min + 1);
    for (int k = 0; k < n_objects; ++k)
      place_with_rejection(data.scene, library[rng.uniform_int(library.size())], 40, rng);
    if (data.scene.placements.empty()) continue;

    const double azimuth = rng.uniform(0.0, 2.0 * M_PI);
    const double elevation = rng.uniform(0.6, 1.0);
    const double radius = 0.65;
    const Vec3 eye{radius * std::cos(azimuth) * std::cos(elevation),
                   radius * std::sin(azimuth) * std::cos(elevation),
                   radius * std::sin(elevation)};
    const CameraModel camera = CameraModel::look_at(eye, {0, 0, 0.05}, 128, 96, 1.0);
    data.cloud = render_cloud(data.scene, camera);

    // A target the camera actually sees.
    std::vector<int> visible;
    for (const Placement& p : data.scene.placements)
      if (static_cast<int>(data.cloud.instance_indices(p.instance_id).size()) >= 80)
        visible.push_back(p.instance_id);
    if (visible.empty()) continue;
    data.target = visible[rng.uniform_int(static_cast<int>(visible.size()))];

    data.crop = crop_target(data.cloud, data.target, config.crop_box_size, 0.0,
                            config.crop_points, rng);

    for (const auto& [grasp, label] :
         generate_reference_set(data.scene, data.target, gripper,
                                config.reference_candidates, config.friction_mu, rng))
      if (label.quality == GraspQuality::positive && !label.collision)
        data.reference_positives.push_back(grasp);
    if (data.reference_positives.size() < 3) continue;

    if (variants.empty()) continue;
    const bool external = variants.front().sampler == "external";
    if (external) {
      for (const auto& [grasp, score] : config.external_grasps)
        data.candidates.push_back(grasp);
    } else {
      const auto samples = surface_normal_sampler(data.crop.object_crop,
                                                  config.grasps_per_scene, 0.005, 0.04, rng);
      const auto evaluate = [&](const Pose& g) {
        return antipodal_score(g, data.crop.object_crop, gripper, config.friction_mu);
      };
      for (const Grasp& sample : samples) {
        const auto chain = mh_refine(sample.pose, evaluate, config.mh_iterations, 0.01,
                                     5.0 * M_PI / 180.0, rng);
        data.candidates.push_back({chain.back(), sample.source});
      }
    }
    if (data.candidates.empty()) continue;

    data.oracle_success.reserve(data.candidates.size());
    for (const Grasp& g : data.candidates)
      data.oracle_success.push_back(
          success_oracle(g.pose, data.scene, data.target, gripper, config.friction_mu));

    const VoxelGrid grid_full = voxelize_scene(data.crop.scene_crop, 100, 0.02, false, 0);
    const VoxelGrid grid_no_target =
        voxelize_scene(data.crop.scene_crop, 100, 0.02, true, data.target);

    for (size_t vi = 0; vi < variants.size(); ++vi) {
      std::vector<double> scores(data.candidates.size());
      for (size_t c = 0; c < data.candidates.size(); ++c)
        scores[c] = variant_score(variants[vi], data, data.candidates[c].pose, gripper,
                                  config.friction_mu, grid_full, grid_no_target);

      // Per-reference best candidate score within the coverage radius.
      std::vector<double> ref_best(data.reference_positives.size(), -1.0);
      for (size_t r = 0; r < data.reference_positives.size(); ++r)
        for (size_t c = 0; c < data.candidates.size(); ++c)
          if (grasp_distance(data.reference_positives[r].pose, data.candidates[c].pose,
                             gripper) < 0.02)
            ref_best[r] = std::max(ref_best[r], scores[c]);

      SceneOutcome outcome;
      outcome.scene_index = s;
      outcome.target_instance = data.target;
      outcome.n_candidates = static_cast<int>(data.candidates.size());
      outcome.n_reference_positives = static_cast<int>(data.reference_positives.size());
      for (double tau : taus) {
        int covered = 0;
        for (double b : ref_best)
          if (b >= tau) ++covered;
        int kept = 0, succeeded = 0;
        for (size_t c = 0; c < data.candidates.size(); ++c) {
          if (scores[c] < tau) continue;
          ++kept;
          if (data.oracle_success[c]) ++succeeded;
        }
        const double cov = static_cast<double>(covered) / ref_best.size();
        const double succ = kept == 0 ? 1.0 : static_cast<double>(succeeded) / kept;
        outcome.operating_points.emplace_back(cov, succ);
      }
      report.variants[vi].scenes.push_back(std::move(outcome));
    }
  }

  // Mean curve across scenes per threshold index.
  for (VariantResult& variant : report.variants) {
    if (variant.scenes.empty()) continue;
    std::map<double, double> merged;
    for (size_t t = 0; t < taus.size(); ++t) {
      double cov = 0.0, succ = 0.0;
      for (const SceneOutcome& sc : variant.scenes) {
        cov += sc.operating_points[t].first;
        succ += sc.operating_points[t].second;
      }
      cov /= variant.scenes.size();
      succ /= variant.scenes.size();
      auto [it, inserted] = merged.try_emplace(cov, succ);
      if (!inserted) it->second = std::max(it->second, succ);
    }
    variant.mean_curve.points.assign(merged.begin(), merged.end());
    variant.mean_curve.auc = auc(variant.mean_curve.points);
    variant.auc = variant.mean_curve.auc;
  }

  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

PairedBootstrap bootstrap_auc_difference(const VariantResult& a, const VariantResult& b,
                                         int resamples, uint64_t seed) {
  if (a.scenes.size() != b.scenes.size() || a.scenes.empty())
    throw std::invalid_argument("bootstrap_auc_difference: mismatched scene outcomes");
  const int n = static_cast<int>(a.scenes.size());
  const size_t n_taus = a.scenes.front().operating_points.size();

  const auto mean_auc = [&](const VariantResult& v, const std::vector<int>& pick) {
    std::map<double, double> merged;
    for (size_t t = 0; t < n_taus; ++t) {
      double cov = 0.0, succ = 0.0;
      for (int idx : pick) {
        cov += v.scenes[idx].operating_points[t].first;
        succ += v.scenes[idx].operating_points[t].second;
      }
      cov /= pick.size();
      succ /= pick.size();
      auto [it, inserted] = merged.try_emplace(cov, succ);
      if (!inserted) it->second = std::max(it->second, succ);
    }
    std::vector<std::pair<double, double>> pts(merged.begin(), merged.end());
    return auc(pts);
  };

  Rng rng(seed);
  std::vector<double> diffs;
  diffs.reserve(resamples);
  int wins = 0;
  for (int r = 0; r < resamples; ++r) {
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = rng.uniform_int(n);
    const double d = mean_auc(a, pick) - mean_auc(b, pick);
    diffs.push_back(d);
    if (d > 0.0) ++wins;
  }
  std::sort(diffs.begin(), diffs.end());

  PairedBootstrap out;
  out.win_fraction = static_cast<double>(wins) / resamples;
  out.diff_p2_5 = diffs[static_cast<size_t>(0.025 * resamples)];
  double sum = 0.0;
  for (double d : diffs) sum += d;
  out.diff_mean = sum / diffs.size();
  return out;
}

}  // namespace graspsynth
