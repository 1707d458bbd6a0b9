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

#include "areagraph/common/geometry2d.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace areagraph {
namespace {

int OrientationSign(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = Cross(b - a, c - a);
  return (v > 0.) - (v < 0.);
}

bool OnSegment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

}  // namespace

double SignedArea(std::span<const Vec2> polygon) {
  double twice_area = 0.;
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    twice_area += Cross(polygon[i], polygon[(i + 1) % n]);
  }
  return 0.5 * twice_area;
}

Vec2 ClosestPointOnSegment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double length_sq = ab.squaredNorm();
  if (length_sq == 0.) return a;
  const double s = std::clamp((p - a).dot(ab) / length_sq, 0., 1.);
  return a + s * ab;
}

double DistanceToSegment(const Vec2& p, const Vec2& a, const Vec2& b) {
  return (p - ClosestPointOnSegment(p, a, b)).norm();
}

double DistanceToBoundary(const Vec2& p, std::span<const Vec2> polygon) {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    best = std::min(best, DistanceToSegment(p, polygon[i], polygon[(i + 1) % n]));
  }
  return best;
}

bool PointInPolygon(const Vec2& p, std::span<const Vec2> polygon) {
  bool inside = false;
  const size_t n = polygon.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = polygon[i];
    const Vec2& b = polygon[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross =
          a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

bool SegmentsIntersect(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                       const Vec2& b1) {
  const int o1 = OrientationSign(a0, a1, b0);
  const int o2 = OrientationSign(a0, a1, b1);
  const int o3 = OrientationSign(b0, b1, a0);
  const int o4 = OrientationSign(b0, b1, a1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && OnSegment(a0, a1, b0)) return true;
  if (o2 == 0 && OnSegment(a0, a1, b1)) return true;
  if (o3 == 0 && OnSegment(b0, b1, a0)) return true;
  if (o4 == 0 && OnSegment(b0, b1, a1)) return true;
  return false;
}

bool IsSimplePolygon(std::span<const Vec2> polygon) {
  const size_t n = polygon.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a0 = polygon[i];
    const Vec2& a1 = polygon[(i + 1) % n];
    if (a0 == a1) return false;
    // Adjacent edges must not fold back onto each other.
    const Vec2& a2 = polygon[(i + 2) % n];
    if (Cross(a1 - a0, a2 - a1) == 0. && (a1 - a0).dot(a2 - a1) < 0.) {
      return false;
    }
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (SegmentsIntersect(a0, a1, polygon[j], polygon[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

double SegmentOrientation(const Vec2& a, const Vec2& b) {
  Vec2 d = b - a;
  if (d.y() < 0. || (d.y() == 0. && d.x() < 0.)) d = -d;
  const double angle = std::atan2(d.y(), d.x());
  return angle >= M_PI ? 0. : angle;
}

std::optional<RayHit> IntersectRaySegment(const Vec2& origin,
                                          const Vec2& direction, const Vec2& a,
                                          const Vec2& b, double min_distance,
                                          double tolerance) {
  const Vec2 edge = b - a;
  const double edge_length = edge.norm();
  if (edge_length == 0.) return std::nullopt;
  const double denom = Cross(direction, edge);
  if (std::abs(denom) <= 1e-15 * edge_length) return std::nullopt;
  const Vec2 to_a = a - origin;
  const double t = Cross(to_a, edge) / denom;
  const double s = Cross(to_a, direction) / denom;
  const double s_tol = tolerance / edge_length;
  if (s < -s_tol || s > 1. + s_tol || t <= min_distance) return std::nullopt;
  return RayHit{t, std::clamp(s, 0., 1.)};
}

}  // namespace areagraph
