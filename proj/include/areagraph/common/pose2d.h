/*
 * Copyright 2026 The Area Graph Localization Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AREAGRAPH_COMMON_POSE2D_H_
#define AREAGRAPH_COMMON_POSE2D_H_

#include <cmath>
#include <tuple>

#include "Eigen/Core"
#include "areagraph/common/geometry2d.h"

namespace areagraph {

// Wraps an angle into [0, 2 pi).
inline double WrapTwoPi(double angle) {
  double wrapped = std::fmod(angle, 2. * M_PI);
  if (wrapped < 0.) wrapped += 2. * M_PI;
  // fmod of a tiny negative value can round up to exactly 2 pi.
  if (wrapped >= 2. * M_PI) wrapped = 0.;
  return wrapped;
}

// Smallest signed difference a - b, in (-pi, pi].
inline double AngleDifference(double a, double b) {
  double d = std::fmod(a - b, 2. * M_PI);
  if (d > M_PI) d -= 2. * M_PI;
  if (d <= -M_PI) d += 2. * M_PI;
  return d;
}

// Robot pose in the map frame. theta is kept in [0, 2 pi).
struct Pose2D {
  double x = 0.;
  double y = 0.;
  double theta = 0.;

  Pose2D() = default;
  Pose2D(double x_in, double y_in, double theta_in)
      : x(x_in), y(y_in), theta(WrapTwoPi(theta_in)) {}

  Vec2 translation() const { return {x, y}; }

  Eigen::Matrix2d rotation() const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Eigen::Matrix2d r;
    r << c, -s, s, c;
    return r;
  }

  // Sensor frame -> map frame.
  Vec2 Transform(const Vec2& p) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {x + c * p.x() - s * p.y(), y + s * p.x() + c * p.y()};
  }

  friend bool operator==(const Pose2D& a, const Pose2D& b) {
    return a.x == b.x && a.y == b.y && a.theta == b.theta;
  }

  // Lexicographic (x, y, theta); used as the deterministic tie-break.
  friend bool LexicographicLess(const Pose2D& a, const Pose2D& b) {
    return std::tie(a.x, a.y, a.theta) < std::tie(b.x, b.y, b.theta);
  }
};

}  // namespace areagraph

#endif  // AREAGRAPH_COMMON_POSE2D_H_
