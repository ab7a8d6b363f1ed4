#pragma once

#include <vector>

#include "graspsynth/grasp.hpp"
#include "graspsynth/gripper.hpp"
#include "graspsynth/scene.hpp"

namespace graspsynth {

/// Success-rate-versus-coverage operating points, strictly increasing in
/// coverage, with the trapezoidal area under them.
struct SuccessCoverageCurve {
  std::vector<std::pair<double, double>> points;  // (coverage, success rate)
  double auc = 0.0;
};

/// Analytic grasp-success verdict: the gripper body at g is collision-free
/// against the full scene (nothing excluded) and the contact-geometry score
/// over the target's full mesh surface exceeds 0.5. Deterministic: the mesh
/// surface sampling is fixed-seeded. Throws when the target is absent.
bool success_oracle(const Pose& g, const Scene& scene, int target_instance,
                    const GripperModel& gripper, double friction_mu);

/// Fraction of reference grasps whose grasp-distance to the nearest
/// generated grasp is below radius. Throws on an empty reference set.
double coverage(const std::vector<Grasp>& generated, const std::vector<Grasp>& reference,
                const GripperModel& gripper, double radius = 0.02);

struct SuccessRate {
  double rate = 1.0;
  bool empty_input = false;  // no attempts: rate pinned to 1.0 and flagged
};

SuccessRate success_rate(const std::vector<Grasp>& generated, const Scene& scene,
                         int target_instance, const GripperModel& gripper, double friction_mu);

/// Traces operating points by sweeping a score threshold over the unique
/// score values (subset = grasps scoring >= threshold), computing coverage
/// against the reference and oracle success per subset. Points collapse to
/// the best success rate at equal coverage.
SuccessCoverageCurve curve_sweep(const std::vector<std::pair<Grasp, double>>& scored,
                                 const std::vector<Grasp>& reference, const Scene& scene,
                                 int target_instance, const GripperModel& gripper,
                                 double friction_mu);

/// Trapezoid over the coverage axis. A curve starting past zero coverage is
/// extended flat to zero first.
double auc(const std::vector<std::pair<double, double>>& points);

}  // namespace graspsynth
