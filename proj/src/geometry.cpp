#include "mhe_slam/geometry.hpp"

#include <cmath>

namespace mhe {

Eigen::Matrix2d rotation_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

namespace {

struct BearingTerms {
  Eigen::Vector2d delta;  // l - x, world frame
  double range = 0.0;
  double c = 0.0;         // cos(theta)
  double s = 0.0;         // sin(theta)
};

BearingTerms bearing_terms(const Pose2& pose, const Landmark& landmark) {
  BearingTerms t;
  t.delta = landmark.position - pose.position();
  t.range = t.delta.norm();
  if (t.range <= kMinBearingRange) {
    throw DegenerateGeometry("bearing undefined: robot coincides with landmark");
  }
  t.c = std::cos(pose.theta);
  t.s = std::sin(pose.theta);
  return t;
}

}  // namespace

Eigen::Vector2d bearing_of(const Pose2& pose, const Landmark& landmark) {
  const BearingTerms t = bearing_terms(pose, landmark);
  const Eigen::Vector2d u = t.delta / t.range;
  // R(-theta) * u
  return {t.c * u.x() + t.s * u.y(), -t.s * u.x() + t.c * u.y()};
}

BearingJacobians bearing_jacobians(const Pose2& pose, const Landmark& landmark) {
  const BearingTerms t = bearing_terms(pose, landmark);
  const Eigen::Vector2d u = t.delta / t.range;

  Eigen::Matrix2d rot_neg;
  rot_neg << t.c, t.s, -t.s, t.c;

  // d/dl of R(-theta) u = R(-theta) (I - u u^T) / r
  const Eigen::Matrix2d projector = Eigen::Matrix2d::Identity() - u * u.transpose();
  const Eigen::Matrix2d d_landmark = rot_neg * projector / t.range;

  // d/dtheta of R(-theta) u: rotate the body bearing by -pi/2.
  const Eigen::Vector2d b = rot_neg * u;
  const Eigen::Vector2d d_theta{b.y(), -b.x()};

  BearingJacobians jac;
  jac.d_landmark = d_landmark;
  jac.d_pose.leftCols<2>() = -d_landmark;
  jac.d_pose.col(2) = d_theta;
  return jac;
}

}  // namespace mhe
