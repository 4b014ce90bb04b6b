#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>

#include "kfslam/types.hpp"

namespace kfslam {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Vector7d = Eigen::Matrix<double, 7, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Matrix7d = Eigen::Matrix<double, 7, 7>;

// Below this rotation angle the closed-form exp/log coefficients are
// replaced by their Taylor expansions (truncation error < 1e-15 there).
inline constexpr double kSmallAngle = 1e-5;

inline Eigen::Matrix3d Skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d s;
  s << 0, -v.z(), v.y(),
       v.z(), 0, -v.x(),
      -v.y(), v.x(), 0;
  return s;
}

inline Eigen::Matrix3d So3Exp(const Eigen::Vector3d& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d hat = Skew(omega);
  if (theta < kSmallAngle) {
    return Eigen::Matrix3d::Identity() + hat + 0.5 * hat * hat;
  }
  const double a = std::sin(theta) / theta;
  const double b = (1.0 - std::cos(theta)) / (theta * theta);
  return Eigen::Matrix3d::Identity() + a * hat + b * hat * hat;
}

// Valid for rotation angles < pi.
inline Eigen::Vector3d So3Log(const Eigen::Matrix3d& rot) {
  const Eigen::AngleAxisd aa(rot);
  return aa.angle() * aa.axis();
}

// Left Jacobian of SO(3): translation block of the SE(3) exponential.
inline Eigen::Matrix3d So3LeftJacobian(const Eigen::Vector3d& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d hat = Skew(omega);
  if (theta < kSmallAngle) {
    return Eigen::Matrix3d::Identity() + 0.5 * hat + hat * hat / 6.0;
  }
  const double theta2 = theta * theta;
  const double a = (1.0 - std::cos(theta)) / theta2;
  const double b = (theta - std::sin(theta)) / (theta2 * theta);
  return Eigen::Matrix3d::Identity() + a * hat + b * hat * hat;
}

// Rigid transform of SE(3). Maps points from the source frame into the
// destination frame, x_dst = R x_src + t; for camera poses this is T_cw
// (world to camera).
struct RigidPose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidPose Identity() { return {}; }

  Eigen::Vector3d operator*(const Eigen::Vector3d& x) const {
    return rotation * x + translation;
  }
  RigidPose operator*(const RigidPose& other) const {
    return {rotation * other.rotation,
            rotation * other.translation + translation};
  }
  RigidPose Inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
  // Camera center of a world-to-camera pose.
  Eigen::Vector3d Center() const {
    return -(rotation.transpose() * translation);
  }
};

// Tangent ordering is (rotation, translation).
inline RigidPose Se3Exp(const Vector6d& v) {
  const Eigen::Vector3d omega = v.head<3>();
  return {So3Exp(omega), So3LeftJacobian(omega) * v.tail<3>()};
}

inline Vector6d Se3Log(const RigidPose& pose) {
  Vector6d v;
  const Eigen::Vector3d omega = So3Log(pose.rotation);
  v.head<3>() = omega;
  v.tail<3>() = So3LeftJacobian(omega).inverse() * pose.translation;
  return v;
}

// Similarity transform of Sim(3), x_dst = s R x_src + t. With scale 1 it
// acts identically to the RigidPose built from the same rotation and
// translation.
struct Similarity {
  double scale = 1.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Similarity Identity() { return {}; }
  static Similarity FromRigid(const RigidPose& pose, double scale = 1.0) {
    return {scale, pose.rotation, pose.translation};
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& x) const {
    return scale * (rotation * x) + translation;
  }
  Similarity operator*(const Similarity& other) const {
    return {scale * other.scale, rotation * other.rotation,
            scale * (rotation * other.translation) + translation};
  }
  Similarity Inverse() const {
    const Eigen::Matrix3d rt = rotation.transpose();
    return {1.0 / scale, rt, -(rt * translation) / scale};
  }
  // SE(3) pose acting the same on directions, with the scale folded into
  // the translation. Standard conversion after Sim(3) pose-graph updates.
  RigidPose ToRigid() const { return {rotation, translation / scale}; }
};

namespace internal {

// W coefficient matrix of the Sim(3) exponential: the translation is
// W(omega, lambda) * upsilon. Closed form from the Sim(3) Lie theory with
// Taylor branches for small angle and small log-scale.
inline Eigen::Matrix3d Sim3W(const Eigen::Vector3d& omega, double lambda) {
  const double theta = omega.norm();
  const double scale = std::exp(lambda);
  const Eigen::Matrix3d hat = Skew(omega);
  double a, b, c;
  if (std::abs(lambda) < kSmallAngle) {
    c = 1.0;
    if (theta < kSmallAngle) {
      a = 0.5;
      b = 1.0 / 6.0;
    } else {
      const double theta2 = theta * theta;
      a = (1.0 - std::cos(theta)) / theta2;
      b = (theta - std::sin(theta)) / (theta2 * theta);
    }
  } else {
    c = (scale - 1.0) / lambda;
    if (theta < kSmallAngle) {
      const double lambda2 = lambda * lambda;
      a = ((lambda - 1.0) * scale + 1.0) / lambda2;
      b = (scale * 0.5 * lambda2 + scale - 1.0 - lambda * scale) /
          (lambda2 * lambda);
    } else {
      const double theta2 = theta * theta;
      const double sa = scale * std::sin(theta);
      const double sb = scale * std::cos(theta);
      const double denom = theta2 + lambda * lambda;
      a = (sa * lambda + (1.0 - sb) * theta) / (theta * denom);
      b = (c - ((sb - 1.0) * lambda + sa * theta) / denom) / theta2;
    }
  }
  return a * hat + b * hat * hat + c * Eigen::Matrix3d::Identity();
}

}  // namespace internal

// Tangent ordering is (rotation, translation, log-scale).
inline Similarity Sim3Exp(const Vector7d& v) {
  const Eigen::Vector3d omega = v.head<3>();
  const double lambda = v[6];
  Similarity s;
  s.scale = std::exp(lambda);
  s.rotation = So3Exp(omega);
  s.translation = internal::Sim3W(omega, lambda) * v.segment<3>(3);
  return s;
}

inline Vector7d Sim3Log(const Similarity& sim) {
  Vector7d v;
  const Eigen::Vector3d omega = So3Log(sim.rotation);
  const double lambda = std::log(sim.scale);
  v.head<3>() = omega;
  v.segment<3>(3) = internal::Sim3W(omega, lambda).inverse() * sim.translation;
  v[6] = lambda;
  return v;
}

// Adjoint of Sim(3) in (rotation, translation, log-scale) ordering:
// exp(Adj(S) v) = S exp(v) S^-1.
inline Matrix7d Sim3Adjoint(const Similarity& s) {
  Matrix7d adj = Matrix7d::Zero();
  adj.block<3, 3>(0, 0) = s.rotation;
  adj.block<3, 3>(3, 0) = Skew(s.translation) * s.rotation;
  adj.block<3, 3>(3, 3) = s.scale * s.rotation;
  adj.block<3, 1>(3, 6) = -s.translation;
  adj(6, 6) = 1.0;
  return adj;
}

// Algebra adjoint ad(x) y = [x, y] for sim(3).
inline Matrix7d Sim3Ad(const Vector7d& x) {
  const Eigen::Vector3d omega = x.head<3>();
  const Eigen::Vector3d upsilon = x.segment<3>(3);
  const double lambda = x[6];
  Matrix7d ad = Matrix7d::Zero();
  ad.block<3, 3>(0, 0) = Skew(omega);
  ad.block<3, 3>(3, 0) = Skew(upsilon);
  ad.block<3, 3>(3, 3) = Skew(omega) + lambda * Eigen::Matrix3d::Identity();
  ad.block<3, 1>(3, 6) = -upsilon;
  return ad;
}

// Jacobian of log(exp(delta) exp(e)) in delta at delta = 0, i.e. the
// inverse left Jacobian of Sim(3). Evaluated through the Bernoulli series
// sum_k B_k/k! ad(e)^k (B_1 = -1/2), accurate to machine precision for
// |e| < 1.5.
inline Matrix7d Sim3DexpInvLeft(const Vector7d& e) {
  // Bernoulli numbers B_0.. (odd ones vanish except B_1).
  static const double kBernoulli[] = {1.0,         -0.5,
                                      1.0 / 6.0,   0.0,
                                      -1.0 / 30.0, 0.0,
                                      1.0 / 42.0,  0.0,
                                      -1.0 / 30.0, 0.0,
                                      5.0 / 66.0,  0.0,
                                      -691.0 / 2730.0};
  const Matrix7d ad = Sim3Ad(e);
  Matrix7d term = Matrix7d::Identity();
  Matrix7d sum = Matrix7d::Zero();
  double factorial = 1.0;
  for (int k = 0; k < 13; ++k) {
    if (k > 0) {
      term = ad * term;
      factorial *= k;
    }
    if (kBernoulli[k] != 0.0) sum += (kBernoulli[k] / factorial) * term;
  }
  // Left perturbation convention: log(exp(delta) exp(e)) = e + J delta with
  // J = sum B_k/k! (+ad)^k ... the series above is for ad; the left version
  // uses +ad with B_1 = +0.5.
  return sum;
}

}  // namespace kfslam
