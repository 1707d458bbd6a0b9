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

#ifndef AREAGRAPH_COMMON_GEOMETRY2D_H_
#define AREAGRAPH_COMMON_GEOMETRY2D_H_

#include <optional>
#include <span>
#include <vector>

#include "Eigen/Core"

namespace areagraph {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Polygon = std::vector<Vec2>;

inline double Cross(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Positive for counter-clockwise vertex order.
double SignedArea(std::span<const Vec2> polygon);

// Perpendicular foot of 'p' on segment [a, b], clamped to the segment.
Vec2 ClosestPointOnSegment(const Vec2& p, const Vec2& a, const Vec2& b);

double DistanceToSegment(const Vec2& p, const Vec2& a, const Vec2& b);

// Distance from 'p' to the nearest edge of the closed polygon.
double DistanceToBoundary(const Vec2& p, std::span<const Vec2> polygon);

// Even-odd rule. Points exactly on the boundary may land on either side; use
// DistanceToBoundary when that matters.
bool PointInPolygon(const Vec2& p, std::span<const Vec2> polygon);

// True if the closed segments [a0, a1] and [b0, b1] share at least one point.
bool SegmentsIntersect(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                       const Vec2& b1);

// True if no two non-adjacent edges of the closed polygon touch and no two
// adjacent edges fold back onto each other.
bool IsSimplePolygon(std::span<const Vec2> polygon);

// Orientation of the undirected segment [a, b] in [0, pi). Identical for
// [a, b] and [b, a].
double SegmentOrientation(const Vec2& a, const Vec2& b);

struct RayHit {
  double distance;  // Along the unit ray direction.
  double segment_parameter;  // In [0, 1] along [a, b].
};

// Intersects the ray origin + t * direction, t > min_distance, with the
// segment [a, b]. 'direction' must have unit length. Endpoint hits within
// 'tolerance' meters count.
std::optional<RayHit> IntersectRaySegment(const Vec2& origin,
                                          const Vec2& direction, const Vec2& a,
                                          const Vec2& b, double min_distance,
                                          double tolerance);

}  // namespace areagraph

#endif  // AREAGRAPH_COMMON_GEOMETRY2D_H_
