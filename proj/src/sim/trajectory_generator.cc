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

#include "areagraph/sim/trajectory_generator.h"

#include <algorithm>
#include <cmath>

#include "Eigen/Geometry"
#include "areagraph/common/error.h"
#include "areagraph/geometry/ray_caster.h"
#include "fmt/format.h"

namespace areagraph {
namespace sim {
namespace {

constexpr double kMaxTurnPerSample = 5. * M_PI / 180.;

void CheckAgainstMap(const std::vector<Vec2>& path, const osmag::AreaGraph& map) {
  for (const Vec2& p : path) {
    if (!map.LocateArea(p)) {
      throw Error(ErrorCode::kPoseOutOfMap,
                  fmt::format("waypoint ({}, {}) is outside the map", p.x(), p.y()));
    }
  }
  const auto segments = geometry::BuildBoundarySegments(map);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    for (const auto& wall : segments) {
      if (wall.ref.passage) continue;
      if (SegmentsIntersect(path[i], path[i + 1], wall.start, wall.end)) {
        throw Error(ErrorCode::kInvalidArgument,
                    fmt::format("leg ({}, {}) -> ({}, {}) crosses a wall of area {}",
                                path[i].x(), path[i].y(), path[i + 1].x(),
                                path[i + 1].y(), wall.ref.area));
      }
    }
  }
}

}  // namespace

std::vector<Vec2> RoundCorners(const std::vector<Vec2>& waypoints, double radius) {
  if (waypoints.size() < 3 || radius <= 0.) return waypoints;
  std::vector<Vec2> out = {waypoints.front()};
  for (size_t i = 1; i + 1 < waypoints.size(); ++i) {
    const Vec2& a = waypoints[i - 1];
    const Vec2& w = waypoints[i];
    const Vec2& b = waypoints[i + 1];
    const double in_length = (w - a).norm();
    const double out_length = (b - w).norm();
    if (in_length == 0. || out_length == 0.) continue;
    const Vec2 u = (w - a) / in_length;
    const Vec2 v = (b - w) / out_length;
    const double turn = std::atan2(Cross(u, v), u.dot(v));
    const double cut = std::min({radius, 0.5 * in_length, 0.5 * out_length});
    // A reversal has no tangent curve.
    if (std::abs(turn) < 1e-9 || std::abs(turn) > M_PI - 1e-6 || cut <= 0.) {
      out.push_back(w);
      continue;
    }
    const Vec2 start = w - cut * u;
    const Vec2 end = w + cut * v;
    // Samples evenly spaced in tangent angle; a chord then turns by at most
    // two steps.
    const int pieces =
        std::max(2, static_cast<int>(std::ceil(std::abs(turn) / (0.5 * kMaxTurnPerSample))));
    for (int k = 0; k <= pieces; ++k) {
      double s = 1.;
      if (k < pieces) {
        const double phi = turn * k / pieces;
        const Vec2 d = Eigen::Rotation2Dd(phi) * u;
        s = Cross(u, d) / (Cross(u, d) - Cross(v, d));
      }
      out.push_back((1. - s) * (1. - s) * start + 2. * s * (1. - s) * w + s * s * end);
    }
  }
  out.push_back(waypoints.back());
  // Drop repeated points so every leg has a direction.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Vec2& p, const Vec2& q) { return (p - q).norm() < 1e-12; }),
            out.end());
  return out;
}

std::vector<TrajectoryRow> GenerateTrajectory(const std::vector<Vec2>& waypoints,
                                              double speed, double frame_rate,
                                              const osmag::AreaGraph* map) {
  if (waypoints.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trajectory needs a waypoint");
  }
  if (!(speed > 0.) || !(frame_rate > 0.)) {
    throw Error(ErrorCode::kInvalidArgument, "speed and frame rate must be > 0");
  }
  if (map != nullptr) CheckAgainstMap(waypoints, *map);
  std::vector<Vec2> path = {waypoints.front()};
  for (const Vec2& p : waypoints) {
    if (p != path.back()) path.push_back(p);
  }

  std::vector<double> cumulative = {0.};
  for (size_t i = 1; i < path.size(); ++i) {
    cumulative.push_back(cumulative.back() + (path[i] - path[i - 1]).norm());
  }
  const double length = cumulative.back();
  const auto heading_of = [&](size_t leg) {
    const Vec2 d = path[leg + 1] - path[leg];
    return std::atan2(d.y(), d.x());
  };

  std::vector<TrajectoryRow> rows;
  if (path.size() == 1) {
    rows.push_back({0., Pose2D(path.front().x(), path.front().y(), 0.), true});
    return rows;
  }
  const double step = speed / frame_rate;
  const long frames = static_cast<long>(std::floor(length / step + 1e-9)) + 1;
  size_t leg = 0;
  for (long k = 0; k < frames; ++k) {
    const double s = std::min(k * step, length);
    while (leg + 2 < path.size() && cumulative[leg + 1] <= s) ++leg;
    const double f = (s - cumulative[leg]) / (cumulative[leg + 1] - cumulative[leg]);
    const Vec2 p = path[leg] + f * (path[leg + 1] - path[leg]);
    rows.push_back({k / frame_rate, Pose2D(p.x(), p.y(), heading_of(leg)), true});
  }
  return rows;
}

}  // namespace sim
}  // namespace areagraph
