#include "graspsynth/pose.hpp"

namespace graspsynth {

Pose Pose::from_axis_angle(const Vec3& axis, double angle, const Vec3& t) {
  return {Quat(Eigen::AngleAxisd(angle, axis.normalized())), t};
}

Pose Pose::from_matrix(const Mat4& m) {
  return {Quat(Mat3(m.block<3, 3>(0, 0))), Vec3(m.block<3, 1>(0, 3))};
}

Mat4 Pose::matrix() const {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(0, 0) = rotation.toRotationMatrix();
  m.block<3, 1>(0, 3) = translation;
  return m;
}

Pose compose(const Pose& a, const Pose& b) {
  return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

Pose inverse(const Pose& p) {
  const Quat qi = p.rotation.conjugate();
  return {qi, qi * (-p.translation)};
}

double rotation_angle(const Pose& a, const Pose& b) {
  const double d = std::min(1.0, std::abs(a.rotation.dot(b.rotation)));
  return 2.0 * std::acos(d);
}

}  // namespace graspsynth
