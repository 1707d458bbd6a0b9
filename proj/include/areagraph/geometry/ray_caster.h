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

#ifndef AREAGRAPH_GEOMETRY_RAY_CASTER_H_
#define AREAGRAPH_GEOMETRY_RAY_CASTER_H_

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "areagraph/common/geometry2d.h"
#include "areagraph/common/pose2d.h"
#include "areagraph/osmag/area_graph.h"
#include "areagraph/scan/organized_scan.h"

namespace areagraph {
namespace geometry {

// Signed distance above which a return behind a door is taken to be seen
// through the open door.
inline constexpr double kPassageThreshold = 0.1;

// Hits on the see-through re-cast closer than this behind the passage are
// the passage itself (or its twin on the neighboring area).
inline constexpr double kPassageExclusion = 1e-3;

// Parametric slack when intersecting rays with map edges.
inline constexpr double kIntersectionEpsilon = 1e-9;

enum class PassageMode {
  kAdaptive,   // Doors open when the return lies beyond them; glass always.
  kAllOpen,    // Every passage is looked through.
  kAllClosed,  // Every passage is a wall.
};

std::optional<PassageMode> ParsePassageMode(std::string_view text);
std::string_view ToString(PassageMode mode);

struct CastOptions {
  PassageMode passage_mode = PassageMode::kAdaptive;
  double passage_threshold = kPassageThreshold;
};

// Identifies a piece of an area boundary: a polygon edge, or the part of it
// covered by a passage.
struct SegmentRef {
  osmag::AreaId area = 0;
  int edge_index = 0;
  std::optional<osmag::PassageId> passage;

  friend bool operator==(const SegmentRef&, const SegmentRef&) = default;
};

struct BoundarySegment {
  Vec2 start;
  Vec2 end;
  SegmentRef ref;
  double orientation = 0.;  // [0, pi)
  osmag::PassageKind passage_kind = osmag::PassageKind::kDoor;
};

struct IntersectionResult {
  double sd = 0.;           // Negative when the point is short of the map.
  Vec2 hit_point;           // Closest point to the scan point on the segment.
  Vec2 intersection;        // Where the ray crosses the segment.
  SegmentRef segment;
  Vec2 segment_start;
  Vec2 segment_end;
  double segment_orientation = 0.;
  bool through_passage = false;
};

// Intersections for a whole point set. hits[k] belongs to point
// point_index[k]; points whose ray found nothing are listed in 'missed'.
struct BatchResult {
  std::vector<IntersectionResult> hits;
  std::vector<int> point_index;
  std::vector<int> missed;

  void clear() {
    hits.clear();
    point_index.clear();
    missed.clear();
  }
};

// Casts scan rays into an AreaGraph. Area boundaries are pre-split where
// passages lie on them. Holds a reference to the map, which must outlive it.
// All queries are const and may run concurrently.
class RayCaster {
 public:
  explicit RayCaster(const osmag::AreaGraph& map);

  const osmag::AreaGraph& map() const { return map_; }
  std::span<const BoundarySegment> segments() const { return segments_; }
  std::span<const BoundarySegment> SegmentsOf(osmag::AreaId area) const;

  // Intersects the ray from the pose through the (sensor frame) point with
  // the boundary of 'origin_area'. See-through passages re-cast the ray
  // against every loaded boundary beyond the passage. Returns nullopt if the
  // ray leaves the area without a hit.
  std::optional<IntersectionResult> Cast(osmag::AreaId origin_area,
                                         const Pose2D& pose,
                                         const Vec2& sensor_point,
                                         const CastOptions& options = {}) const;
  // Same, for callers that already hold SegmentsOf(origin_area).
  std::optional<IntersectionResult> CastMapPoint(
      std::span<const BoundarySegment> area_segments, const Vec2& origin,
      const Vec2& map_point, const CastOptions& options = {}) const;

  // As Cast, with the ray origin and the scan point already in the map frame.
  std::optional<IntersectionResult> CastMapPoint(
      osmag::AreaId origin_area, const Vec2& origin, const Vec2& map_point,
      const CastOptions& options = {}) const;

  // Element-wise Cast. If the pose is not inside 'origin_area' the containing
  // area is looked up; throws Error(kPoseOutOfMap) when there is none.
  void BatchIntersect(osmag::AreaId origin_area, const Pose2D& pose,
                      const scan::ClutterFreePointSet& points,
                      const CastOptions& options, BatchResult* result) const;
  BatchResult BatchIntersect(osmag::AreaId origin_area, const Pose2D& pose,
                             const scan::ClutterFreePointSet& points,
                             const CastOptions& options = {}) const;

 private:
  struct Range {
    size_t begin = 0;
    size_t end = 0;
  };

  const osmag::AreaGraph& map_;
  std::vector<BoundarySegment> segments_;  // Grouped by area.
  std::unordered_map<osmag::AreaId, Range> area_ranges_;
};

// Splits every area edge at the passages lying on it.
std::vector<BoundarySegment> BuildBoundarySegments(const osmag::AreaGraph& map);

}  // namespace geometry
}  // namespace areagraph

#endif  // AREAGRAPH_GEOMETRY_RAY_CASTER_H_
