#pragma once

#include "graspsynth/bvh.hpp"
#include "graspsynth/pose.hpp"
#include "graspsynth/trimesh.hpp"

namespace graspsynth {

/// Parallel-jaw gripper at a fixed opening. Gripper frame: +z is the
/// approach direction, y is the closing axis (jaws move along ±y), the
/// origin sits on the finger-root plane so the fingers and the closing
/// region they sweep occupy z in [0, finger length].
///
/// body_boxes is an exact axis-aligned decomposition of body_mesh in the
/// gripper frame (palm plus two fingers); point-in-body and clearance
/// queries use it instead of the mesh.
struct GripperModel {
  std::vector<Vec3> control_points;  // gripper frame, symmetric about y = 0
  TriMesh body_mesh;                 // watertight, gripper frame
  Bvh body_bvh;
  double jaw_width = 0.0;  // inner separation of the fingers
  Aabb closing_region;     // volume swept by the closing fingers
  std::vector<Aabb> body_boxes;
};

/// Builds the default gripper. Control points (7): base, two finger roots,
/// two mid-finger points, two fingertips, spread to the given jaw width.
GripperModel make_parallel_jaw_gripper(double jaw_width = 0.08);

/// Control points transformed by grasp pose g, order preserved.
std::vector<Vec3> control_points(const Pose& g, const GripperModel& gripper);

/// Mean Euclidean displacement of the gripper control points between the
/// two poses. A metric on grasp poses: symmetric, zero iff the rigid
/// actions agree on the control points.
double grasp_distance(const Pose& g1, const Pose& g2, const GripperModel& gripper);

inline Vec3 approach_axis(const Pose& g) { return g.rotate(Vec3::UnitZ()); }
inline Vec3 closing_axis(const Pose& g) { return g.rotate(Vec3::UnitY()); }

/// True if world point p lies inside the gripper body at pose g.
bool point_in_body(const GripperModel& gripper, const Pose& g, const Vec3& p);

/// Distance from world point p to the gripper body surface at pose g
/// (0 when inside).
double body_distance(const GripperModel& gripper, const Pose& g, const Vec3& p);

}  // namespace graspsynth
