#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mhe_slam/errors.hpp"

namespace mhe {

/// Minimum robot-to-landmark distance below which a bearing is undefined.
inline constexpr double kMinBearingRange = 1e-9;

/// Planar robot state. The heading is kept unwrapped (plain real number, not
/// reduced to a principal interval): the single-integrator dynamics used by
/// the estimators act on theta additively, and bearings only consume theta
/// through cos/sin.
struct Pose2 {
  double x1 = 0.0;     ///< position, meters
  double x2 = 0.0;     ///< position, meters
  double theta = 0.0;  ///< heading, radians (unwrapped)

  Eigen::Vector2d position() const { return {x1, x2}; }
  Eigen::Vector3d vector() const { return {x1, x2, theta}; }
  static Pose2 from_vector(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }
};

/// A single 2D landmark position.
struct Landmark {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
};

/// Ordered collection of landmarks. The index is the identity of each
/// landmark; the order never changes after construction.
struct LandmarkMap {
  std::vector<Landmark> landmarks;

  int size() const { return static_cast<int>(landmarks.size()); }
  const Eigen::Vector2d& position(int j) const { return landmarks[static_cast<size_t>(j)].position; }
  Eigen::Vector2d& position(int j) { return landmarks[static_cast<size_t>(j)].position; }
};

/// Robot pose together with the landmark map, dimension 3 + 2J.
struct JointState {
  Pose2 pose;
  LandmarkMap map;

  int dimension() const { return 3 + 2 * map.size(); }
};

/// Standard planar rotation matrix R(theta).
Eigen::Matrix2d rotation_matrix(double theta);

/// Unit direction from the robot to the landmark, expressed in the robot body
/// frame: R(-theta) (l - x) / ||l - x||.
///
/// Throws DegenerateGeometry when the robot and landmark are within
/// kMinBearingRange of each other.
Eigen::Vector2d bearing_of(const Pose2& pose, const Landmark& landmark);

struct BearingJacobians {
  Eigen::Matrix<double, 2, 3> d_pose;      ///< derivative wrt (x1, x2, theta)
  Eigen::Matrix2d d_landmark;              ///< derivative wrt landmark position
};

/// Analytic Jacobians of the noiseless bearing map.
BearingJacobians bearing_jacobians(const Pose2& pose, const Landmark& landmark);

}  // namespace mhe
