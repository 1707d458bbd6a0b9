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

#include "areagraph/osmag/validation.h"

#include <algorithm>
#include <unordered_map>

#include "areagraph/common/geometry2d.h"
#include "areagraph/osmag/area_graph.h"
#include "fmt/format.h"
#include "src/osmag/schema.h"

namespace areagraph {
namespace osmag {
namespace {

constexpr double kOverlapTolerance = 1e-6;

bool ProperlyCross(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                   const Vec2& b1) {
  const double o1 = Cross(a1 - a0, b0 - a0);
  const double o2 = Cross(a1 - a0, b1 - a0);
  const double o3 = Cross(b1 - b0, a0 - b0);
  const double o4 = Cross(b1 - b0, a1 - b0);
  return o1 * o2 < 0. && o3 * o4 < 0.;
}

bool StrictlyInside(const Vec2& p, const Polygon& polygon) {
  return PointInPolygon(p, polygon) &&
         DistanceToBoundary(p, polygon) > kOverlapTolerance;
}

bool Overlap(const Polygon& a, const Polygon& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      if (ProperlyCross(a[i], a[(i + 1) % a.size()], b[j],
                        b[(j + 1) % b.size()])) {
        return true;
      }
    }
  }
  for (const Vec2& v : a) {
    if (StrictlyInside(v, b)) return true;
  }
  for (const Vec2& v : b) {
    if (StrictlyInside(v, a)) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> ValidateDocument(const OsmDocument& doc) {
  std::vector<Violation> violations;
  const auto report = [&](std::string code, OsmId id, std::string message) {
    violations.push_back({std::move(code), id, std::move(message)});
  };

  const internal::Interpretation interpretation = internal::Interpret(doc);
  std::unordered_map<AreaId, const internal::AreaRecord*> areas_by_id;
  for (const auto& record : interpretation.areas) {
    areas_by_id.emplace(record.way->id, &record);
  }

  for (const auto& record : interpretation.areas) {
    const OsmId id = record.way->id;
    if (!record.closed) {
      report("area_not_closed", id,
             fmt::format("area {} is not a closed way", id));
    }
    Polygon distinct = record.polygon;
    std::sort(distinct.begin(), distinct.end(), [](const Vec2& a, const Vec2& b) {
      return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
      report("too_few_vertices", id,
             fmt::format("area {} has {} distinct vertices, need at least 3",
                         id, distinct.size()));
    } else if (!IsSimplePolygon(record.polygon)) {
      report("self_intersecting_polygon", id,
             fmt::format("area {} polygon is not simple", id));
    }
    if (!record.type) {
      report("unknown_area_type", id,
             fmt::format("area {} has an unknown {}", id, kAreaTypeKey));
    }
    if (FindTag(record.way->tags, kLevelKey) && !record.level) {
      report("unknown_level", id,
             fmt::format("area {} has a non-integer level", id));
    }
    if (FindTag(record.way->tags, kParentKey) &&
        (!record.parent || !areas_by_id.contains(*record.parent))) {
      report("missing_parent", id,
             fmt::format("area {} names a parent that is not an area", id));
    }
  }

  for (const auto& record : interpretation.passages) {
    const OsmId id = record.way->id;
    if (record.points.size() != 2) {
      report("passage_node_count", id,
             fmt::format("passage {} has {} nodes, need exactly 2", id,
                         record.points.size()));
      continue;
    }
    if (record.points[0] == record.points[1]) {
      report("passage_degenerate", id,
             fmt::format("passage {} endpoints coincide", id));
      continue;
    }
    if (!record.kind) {
      report("unknown_passage_type", id,
             fmt::format("passage {} has an unknown {}", id, kPassageTypeKey));
    }

    std::vector<const internal::AreaRecord*> connected;
    bool missing = false;
    for (const auto& ref : {record.from, record.to}) {
      if (!ref) continue;
      const auto it = areas_by_id.find(*ref);
      if (it == areas_by_id.end()) {
        report("missing_connected_area", id,
               fmt::format("passage {} connects missing area {}", id, *ref));
        missing = true;
      } else {
        connected.push_back(it->second);
      }
    }
    if (missing) continue;
    if (connected.empty()) {
      // Inferred connectivity: some area must carry the passage.
      const bool on_some_area = std::any_of(
          interpretation.areas.begin(), interpretation.areas.end(),
          [&](const internal::AreaRecord& area) {
            return area.polygon.size() >= 3 &&
                   DistanceToBoundary(record.points[0], area.polygon) <=
                       kSnapTolerance &&
                   DistanceToBoundary(record.points[1], area.polygon) <=
                       kSnapTolerance;
          });
      if (!on_some_area) {
        report("snap_tolerance", id,
               fmt::format("passage {} does not lie on any area boundary "
                           "within {} m",
                           id, kSnapTolerance));
      }
      continue;
    }
    for (const auto* area : connected) {
      if (area->polygon.size() < 3) continue;
      for (int e = 0; e < 2; ++e) {
        const double d = DistanceToBoundary(record.points[e], area->polygon);
        if (d > kSnapTolerance) {
          report("snap_tolerance", id,
                 fmt::format("passage {} endpoint {} is {:.4f} m from the "
                             "boundary of area {} (tolerance {} m)",
                             id, e, d, area->way->id, kSnapTolerance));
        }
      }
    }
  }

  // Leaf areas of one level must not overlap.
  std::vector<const internal::AreaRecord*> leaves;
  for (const auto& record : interpretation.areas) {
    if (!interpretation.parents.contains(record.way->id) &&
        record.polygon.size() >= 3) {
      leaves.push_back(&record);
    }
  }
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      if (leaves[i]->level != leaves[j]->level) continue;
      if (Overlap(leaves[i]->polygon, leaves[j]->polygon)) {
        report("area_overlap", leaves[i]->way->id,
               fmt::format("areas {} and {} overlap", leaves[i]->way->id,
                           leaves[j]->way->id));
      }
    }
  }
  return violations;
}

}  // namespace osmag
}  // namespace areagraph
