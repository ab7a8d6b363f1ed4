#include "graspsynth/gripper.hpp"

#include "graspsynth/primitives.hpp"

namespace graspsynth {

namespace {

// Fixed proportions; only the jaw width is configurable.
constexpr double kFingerLength = 0.05;
constexpr double kFingerThickness = 0.01;  // along y
constexpr double kFingerDepth = 0.02;      // along x
constexpr double kPalmHeight = 0.03;
constexpr double kPalmDepth = 0.03;

void append_box(TriMesh& mesh, const Aabb& box) {
  const TriMesh b = make_box(box.extent());
  const int base = static_cast<int>(mesh.vertices.size());
  const Vec3 c = box.center();
  for (const Vec3& v : b.vertices) mesh.vertices.push_back(v + c);
  for (const auto& t : b.triangles)
    mesh.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
}

}  // namespace

// Frame: origin on the finger-root plane, fingers extending along +z (the
// approach direction), fingertip plane at z = kFingerLength. An object
// between the jaws therefore occupies the closing region z in
// [0, kFingerLength].
GripperModel make_parallel_jaw_gripper(double jaw_width) {
  const double half_w = 0.5 * jaw_width;

  GripperModel g;
  g.jaw_width = jaw_width;

  const Aabb finger_pos{{-0.5 * kFingerDepth, half_w, 0.0},
                        {0.5 * kFingerDepth, half_w + kFingerThickness, kFingerLength}};
  const Aabb finger_neg{{-0.5 * kFingerDepth, -half_w - kFingerThickness, 0.0},
                        {0.5 * kFingerDepth, -half_w, kFingerLength}};
  const Aabb palm{{-0.5 * kPalmDepth, -half_w - kFingerThickness - 0.005, -kPalmHeight},
                  {0.5 * kPalmDepth, half_w + kFingerThickness + 0.005, 0.0}};
  g.body_boxes = {palm, finger_neg, finger_pos};

  for (const Aabb& box : g.body_boxes) append_box(g.body_mesh, box);
  g.body_bvh = Bvh(g.body_mesh);

  g.closing_region = {{-0.5 * kFingerDepth, -half_w, 0.0},
                      {0.5 * kFingerDepth, half_w, kFingerLength}};

  g.control_points = {{0.0, 0.0, -kPalmHeight},
                      {0.0, -half_w, 0.0},
                      {0.0, half_w, 0.0},
                      {0.0, -half_w, 0.5 * kFingerLength},
                      {0.0, half_w, 0.5 * kFingerLength},
                      {0.0, -half_w, kFingerLength},
                      {0.0, half_w, kFingerLength}};
  return g;
}

std::vector<Vec3> control_points(const Pose& g, const GripperModel& gripper) {
  std::vector<Vec3> out;
  out.reserve(gripper.control_points.size());
  for (const Vec3& p : gripper.control_points) out.push_back(g.apply(p));
  return out;
}

double grasp_distance(const Pose& g1, const Pose& g2, const GripperModel& gripper) {
  double sum = 0.0;
  for (const Vec3& p : gripper.control_points) sum += (g1.apply(p) - g2.apply(p)).norm();
  return sum / static_cast<double>(gripper.control_points.size());
}

bool point_in_body(const GripperModel& gripper, const Pose& g, const Vec3& p) {
  const Vec3 local = inverse(g).apply(p);
  for (const Aabb& box : gripper.body_boxes)
    if (box.contains(local)) return true;
  return false;
}

double body_distance(const GripperModel& gripper, const Pose& g, const Vec3& p) {
  const Vec3 local = inverse(g).apply(p);
  double d = std::numeric_limits<double>::max();
  for (const Aabb& box : gripper.body_boxes) d = std::min(d, box.distance(local));
  return d;
}

}  // namespace graspsynth
