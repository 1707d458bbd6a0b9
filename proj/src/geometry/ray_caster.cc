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

#include "areagraph/geometry/ray_caster.h"

#include <algorithm>
#include <limits>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {
namespace geometry {
namespace {

// Boundary pieces shorter than this are dropped when splitting at passages.
constexpr double kMinPieceLength = 1e-6;

struct Candidate {
  const BoundarySegment* segment = nullptr;
  double distance = std::numeric_limits<double>::infinity();
};

// Nearest hit among 'segments' farther than 'min_distance'. On ties the
// earlier segment (lower edge index) wins.
Candidate NearestHit(std::span<const BoundarySegment> segments,
                     const Vec2& origin, const Vec2& direction,
                     double min_distance) {
  Candidate best;
  for (const BoundarySegment& segment : segments) {
    const auto hit =
        IntersectRaySegment(origin, direction, segment.start, segment.end,
                            min_distance, kIntersectionEpsilon);
    if (hit && hit->distance < best.distance - kIntersectionEpsilon) {
      best.segment = &segment;
      best.distance = hit->distance;
    }
  }
  return best;
}

IntersectionResult MakeResult(const BoundarySegment& segment, const Vec2& origin,
                              const Vec2& direction, double hit_distance,
                              const Vec2& point, double range) {
  IntersectionResult result;
  result.intersection = origin + hit_distance * direction;
  result.hit_point = ClosestPointOnSegment(point, segment.start, segment.end);
  result.sd = (point - result.hit_point).norm();
  if (range < hit_distance) result.sd = -result.sd;
  result.segment = segment.ref;
  result.segment_start = segment.start;
  result.segment_end = segment.end;
  result.segment_orientation = segment.orientation;
  return result;
}

}  // namespace

std::optional<PassageMode> ParsePassageMode(std::string_view text) {
  if (text == "adaptive") return PassageMode::kAdaptive;
  if (text == "open" || text == "all_open") return PassageMode::kAllOpen;
  if (text == "closed" || text == "all_closed") return PassageMode::kAllClosed;
  return std::nullopt;
}

std::string_view ToString(PassageMode mode) {
  switch (mode) {
    case PassageMode::kAdaptive:
      return "adaptive";
    case PassageMode::kAllOpen:
      return "open";
    case PassageMode::kAllClosed:
      return "closed";
  }
  return "adaptive";
}

std::vector<BoundarySegment> BuildBoundarySegments(const osmag::AreaGraph& map) {
  std::vector<BoundarySegment> segments;
  for (const osmag::Area& area : map.areas()) {
    const size_t n = area.polygon.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2& a = area.polygon[i];
      const Vec2& b = area.polygon[(i + 1) % n];
      const Vec2 ab = b - a;
      const double length_sq = ab.squaredNorm();
      if (length_sq == 0.) continue;

      struct Cut {
        double s0;
        double s1;
        const osmag::Passage* passage;
      };
      std::vector<Cut> cuts;
      for (const osmag::Passage& passage : map.passages()) {
        const Vec2& p0 = passage.endpoints[0];
        const Vec2& p1 = passage.endpoints[1];
        if (DistanceToSegment(p0, a, b) > osmag::kSnapTolerance ||
            DistanceToSegment(p1, a, b) > osmag::kSnapTolerance) {
          continue;
        }
        double s0 = std::clamp((p0 - a).dot(ab) / length_sq, 0., 1.);
        double s1 = std::clamp((p1 - a).dot(ab) / length_sq, 0., 1.);
        if (s0 > s1) std::swap(s0, s1);
        cuts.push_back({s0, s1, &passage});
      }
      std::sort(cuts.begin(), cuts.end(),
                [](const Cut& x, const Cut& y) { return x.s0 < y.s0; });

      const auto emit = [&](double s0, double s1, const osmag::Passage* passage) {
        const Vec2 start = a + s0 * ab;
        const Vec2 end = a + s1 * ab;
        if ((end - start).norm() < kMinPieceLength) return;
        BoundarySegment segment;
        segment.start = start;
        segment.end = end;
        segment.ref = {area.id, static_cast<int>(i), std::nullopt};
        segment.orientation = SegmentOrientation(a, b);
        if (passage != nullptr) {
          segment.ref.passage = passage->id;
          segment.passage_kind = passage->kind;
        }
        segments.push_back(segment);
      };
      double cursor = 0.;
      for (const Cut& cut : cuts) {
        if (cut.s0 < cursor) continue;  // Overlapping passages: keep first.
        emit(cursor, cut.s0, nullptr);
        emit(cut.s0, cut.s1, cut.passage);
        cursor = cut.s1;
      }
      emit(cursor, 1., nullptr);
    }
  }
  return segments;
}

RayCaster::RayCaster(const osmag::AreaGraph& map)
    : map_(map), segments_(BuildBoundarySegments(map)) {
  for (size_t i = 0; i < segments_.size(); ++i) {
    const osmag::AreaId id = segments_[i].ref.area;
    auto [it, inserted] = area_ranges_.try_emplace(id, Range{i, i + 1});
    if (!inserted) it->second.end = i + 1;
  }
}

std::span<const BoundarySegment> RayCaster::SegmentsOf(osmag::AreaId area) const {
  const auto it = area_ranges_.find(area);
  if (it == area_ranges_.end()) return {};
  return std::span<const BoundarySegment>(segments_).subspan(
      it->second.begin, it->second.end - it->second.begin);
}

std::optional<IntersectionResult> RayCaster::Cast(osmag::AreaId origin_area,
                                                  const Pose2D& pose,
                                                  const Vec2& sensor_point,
                                                  const CastOptions& options) const {
  return CastMapPoint(origin_area, pose.translation(),
                      pose.Transform(sensor_point), options);
}

std::optional<IntersectionResult> RayCaster::CastMapPoint(
    osmag::AreaId origin_area, const Vec2& origin, const Vec2& point,
    const CastOptions& options) const {
  return CastMapPoint(SegmentsOf(origin_area), origin, point, options);
}

std::optional<IntersectionResult> RayCaster::CastMapPoint(
    std::span<const BoundarySegment> area_segments, const Vec2& origin,
    const Vec2& point, const CastOptions& options) const {
  const Vec2 ray = point - origin;
  const double range = ray.norm();
  if (!(range > kIntersectionEpsilon)) return std::nullopt;
  const Vec2 direction = ray / range;

  const Candidate first = NearestHit(area_segments, origin, direction,
                                     kIntersectionEpsilon);
  if (first.segment == nullptr) return std::nullopt;
  IntersectionResult result = MakeResult(*first.segment, origin, direction,
                                         first.distance, point, range);
  if (!first.segment->ref.passage) return result;

  bool see_through = false;
  switch (options.passage_mode) {
    case PassageMode::kAllOpen:
      see_through = true;
      break;
    case PassageMode::kAllClosed:
      see_through = false;
      break;
    case PassageMode::kAdaptive:
      see_through = first.segment->passage_kind ==
                        osmag::PassageKind::kTransparent ||
                    result.sd > options.passage_threshold;
      break;
  }
  if (!see_through) return result;

  // Whatever lies behind the passage: nearest boundary of any loaded area.
  const Candidate behind = NearestHit(segments_, origin, direction,
                                      first.distance + kPassageExclusion);
  if (behind.segment == nullptr) return result;
  result = MakeResult(*behind.segment, origin, direction, behind.distance,
                      point, range);
  result.through_passage = true;
  return result;
}

void RayCaster::BatchIntersect(osmag::AreaId origin_area, const Pose2D& pose,
                               const scan::ClutterFreePointSet& points,
                               const CastOptions& options,
                               BatchResult* result) const {
  result->clear();
  if (!map_.Contains(origin_area, pose.translation())) {
    const auto located = map_.LocateArea(pose.translation());
    if (!located) {
      throw Error(ErrorCode::kPoseOutOfMap,
                  fmt::format("pose ({}, {}) is outside every area", pose.x,
                              pose.y));
    }
    origin_area = *located;
  }
  result->hits.reserve(points.size());
  result->point_index.reserve(points.size());
  const std::span<const BoundarySegment> area_segments = SegmentsOf(origin_area);
  const Vec2 origin = pose.translation();
  const Eigen::Matrix2d rotation = pose.rotation();
  for (size_t i = 0; i < points.size(); ++i) {
    auto hit = CastMapPoint(area_segments, origin,
                            origin + rotation * points.points[i], options);
    if (hit) {
      result->hits.push_back(*hit);
      result->point_index.push_back(static_cast<int>(i));
    } else {
      result->missed.push_back(static_cast<int>(i));
    }
  }
}

BatchResult RayCaster::BatchIntersect(osmag::AreaId origin_area,
                                      const Pose2D& pose,
                                      const scan::ClutterFreePointSet& points,
                                      const CastOptions& options) const {
  BatchResult result;
  BatchIntersect(origin_area, pose, points, options, &result);
  return result;
}

}  // namespace geometry
}  // namespace areagraph
