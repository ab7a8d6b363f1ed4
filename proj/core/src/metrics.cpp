#include "graspsynth/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "graspsynth/collision.hpp"
#include "graspsynth/rng.hpp"
#include "graspsynth/scorer.hpp"

namespace graspsynth {

namespace {

constexpr int kOracleSurfaceSamples = 1024;
constexpr uint64_t kOracleSeed = 0x5eedULL;

}  // namespace

bool success_oracle(const Pose& g, const Scene& scene, int target_instance,
                    const GripperModel& gripper, double friction_mu) {
  const Placement* target = scene.find(target_instance);
  if (!target) throw std::invalid_argument("success_oracle: target not in scene");

  if (exact_collision(gripper, g, scene).colliding) return false;

  Rng rng(kOracleSeed);
  const SurfacePoints surf = sample_surface(target->world_mesh, kOracleSurfaceSamples, rng);
  PointCloud cloud;
  cloud.points = surf.points;
  cloud.normals = surf.normals;
  cloud.instance_ids.assign(surf.points.size(), target_instance);
  cloud.source_flags.assign(surf.points.size(), 0);
  return antipodal_score(g, cloud, gripper, friction_mu) > 0.5;
}

double coverage(const std::vector<Grasp>& generated, const std::vector<Grasp>& reference,
                const GripperModel& gripper, double radius) {
  if (reference.empty()) throw std::invalid_argument("coverage: empty reference set");
  if (generated.empty()) return 0.0;

  int covered = 0;
  for (const Grasp& ref : reference) {
    for (const Grasp& gen : generated) {
      if (grasp_distance(ref.pose, gen.pose, gripper) < radius) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(reference.size());
}

SuccessRate success_rate(const std::vector<Grasp>& generated, const Scene& scene,
                         int target_instance, const GripperModel& gripper, double friction_mu) {
  if (generated.empty()) return {1.0, true};
  int successes = 0;
  for (const Grasp& g : generated)
    if (success_oracle(g.pose, scene, target_instance, gripper, friction_mu)) ++successes;
  return {static_cast<double>(successes) / static_cast<double>(generated.size()), false};
}

SuccessCoverageCurve curve_sweep(const std::vector<std::pair<Grasp, double>>& scored,
                                 const std::vector<Grasp>& reference, const Scene& scene,
                                 int target_instance, const GripperModel& gripper,
                                 double friction_mu) {
  SuccessCoverageCurve curve;
  if (scored.empty()) return curve;

  std::set<double> thresholds;
  for (const auto& [grasp, score] : scored) thresholds.insert(score);

  // Best success rate seen at each coverage.
  std::map<double, double> by_coverage;
  for (double tau : thresholds) {
    std::vector<Grasp> subset;
    for (const auto& [grasp, score] : scored)
      if (score >= tau) subset.push_back(grasp);
    const double cov = coverage(subset, reference, gripper);
    const double succ = success_rate(subset, scene, target_instance, gripper, friction_mu).rate;
    auto [it, inserted] = by_coverage.try_emplace(cov, succ);
    if (!inserted) it->second = std::max(it->second, succ);
  }

  curve.points.assign(by_coverage.begin(), by_coverage.end());
  curve.auc = auc(curve.points);
  return curve;
}

double auc(const std::vector<std::pair<double, double>>& points) {
  if (points.empty()) return 0.0;
  std::vector<std::pair<double, double>> p = points;
  std::sort(p.begin(), p.end());
  if (p.front().first > 0.0) p.insert(p.begin(), {0.0, p.front().second});

  double area = 0.0;
  for (size_t i = 1; i < p.size(); ++i)
    area += 0.5 * (p[i].second + p[i - 1].second) * (p[i].first - p[i - 1].first);
  return area;
}

}  // namespace graspsynth
