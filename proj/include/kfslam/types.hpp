#pragma once

#include <cmath>
#include <cstdint>

namespace kfslam {

using KeyframeId = std::int64_t;
using PointId = std::int64_t;

inline constexpr KeyframeId kInvalidKeyframe = -1;
inline constexpr PointId kInvalidPoint = -1;

// Image pyramid model shared by the whole system. Features carry a scale
// level in [0, kNumScaleLevels) and a measurement sigma of
// kScaleFactor^level pixels.
inline constexpr int kNumScaleLevels = 8;
inline constexpr double kScaleFactor = 1.2;

inline double ScaleSigma(int level) { return std::pow(kScaleFactor, level); }
inline double ScaleSigma2(int level) {
  return std::pow(kScaleFactor * kScaleFactor, level);
}

// Chi-square 95% quantiles used as gating thresholds throughout: 1 DoF for
// epipolar distances, 2 DoF for reprojection errors.
inline constexpr double kChi2OneDof = 3.84;
inline constexpr double kChi2TwoDof = 5.99;

inline constexpr double kPi = 3.14159265358979323846;

inline double DegToRad(double deg) { return deg * kPi / 180.0; }
inline double RadToDeg(double rad) { return rad * 180.0 / kPi; }

}  // namespace kfslam
