#pragma once

#include "graspsynth/types.hpp"

namespace graspsynth {

/// Rigid transform in SE(3), rotation stored as a unit quaternion.
/// The constructor normalizes, so |rotation| == 1 holds for every Pose.
struct Pose {
  Quat rotation{Quat::Identity()};
  Vec3 translation{Vec3::Zero()};

  Pose() = default;
  Pose(const Quat& q, const Vec3& t) : rotation(q.normalized()), translation(t) {}

  static Pose identity() { return {}; }
  static Pose from_translation(const Vec3& t) { return {Quat::Identity(), t}; }
  static Pose from_axis_angle(const Vec3& axis, double angle, const Vec3& t = Vec3::Zero());
  static Pose from_matrix(const Mat4& m);

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 rotate(const Vec3& v) const { return rotation * v; }

  Mat4 matrix() const;
};

/// a ∘ b: applies b first, then a.
Pose compose(const Pose& a, const Pose& b);

Pose inverse(const Pose& p);

/// Rotation angle (radians) between the two poses' orientations.
double rotation_angle(const Pose& a, const Pose& b);

}  // namespace graspsynth
