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

#include "areagraph/osmag/area_graph.h"

#include <algorithm>
#include <charconv>

#include "areagraph/common/error.h"
#include "fmt/format.h"
#include "src/osmag/schema.h"

namespace areagraph {
namespace osmag {
namespace internal {

std::optional<OsmId> ParseId(std::string_view text) {
  OsmId value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

Interpretation Interpret(const OsmDocument& doc) {
  Interpretation result;
  result.origin = DocumentOrigin(doc);
  const auto node_index = BuildNodeIndex(doc);
  const auto to_local = [&](OsmId ref) {
    const RawNode& node = doc.nodes[node_index.at(ref)];
    return ToLocalFrame({node.lat, node.lon}, result.origin);
  };

  for (const RawWay& way : doc.ways) {
    const auto type = FindTag(way.tags, kTypeKey);
    if (type == kTypeArea) {
      AreaRecord record;
      record.way = &way;
      std::vector<OsmId> refs = way.node_refs;
      record.closed = refs.size() > 1 && refs.front() == refs.back();
      if (record.closed) refs.pop_back();
      for (const OsmId ref : refs) record.polygon.push_back(to_local(ref));
      const auto area_type = FindTag(way.tags, kAreaTypeKey);
      record.type = area_type ? ParseAreaType(*area_type) : AreaType::kRoom;
      // Untagged areas live on the ground level.
      const auto level = FindTag(way.tags, kLevelKey);
      record.level = level ? ParseInt(*level) : std::optional<int>(0);
      if (const auto parent = FindTag(way.tags, kParentKey)) {
        record.parent = ParseId(*parent);
        if (record.parent) result.parents.insert(*record.parent);
      }
      result.areas.push_back(std::move(record));
    } else if (type == kTypePassage) {
      PassageRecord record;
      record.way = &way;
      for (const OsmId ref : way.node_refs) record.points.push_back(to_local(ref));
      const auto kind = FindTag(way.tags, kPassageTypeKey);
      record.kind = kind ? ParsePassageKind(*kind) : PassageKind::kDoor;
      if (const auto from = FindTag(way.tags, kFromKey)) record.from = ParseId(*from);
      if (const auto to = FindTag(way.tags, kToKey)) record.to = ParseId(*to);
      result.passages.push_back(std::move(record));
    }
  }
  return result;
}

}  // namespace internal

std::optional<AreaType> ParseAreaType(std::string_view text) {
  if (text == "room") return AreaType::kRoom;
  if (text == "corridor") return AreaType::kCorridor;
  if (text == "structure") return AreaType::kStructure;
  return std::nullopt;
}

std::optional<PassageKind> ParsePassageKind(std::string_view text) {
  if (text == "door") return PassageKind::kDoor;
  if (text == "transparent") return PassageKind::kTransparent;
  return std::nullopt;
}

std::string_view ToString(AreaType type) {
  switch (type) {
    case AreaType::kRoom:
      return "room";
    case AreaType::kCorridor:
      return "corridor";
    case AreaType::kStructure:
      return "structure";
  }
  return "room";
}

std::string_view ToString(PassageKind kind) {
  return kind == PassageKind::kTransparent ? "transparent" : "door";
}

AreaGraph::AreaGraph(std::vector<Area> areas, std::vector<Passage> passages,
                     GeoPoint origin, int level)
    : areas_(std::move(areas)),
      passages_(std::move(passages)),
      origin_(origin),
      level_(level) {
  std::sort(areas_.begin(), areas_.end(),
            [](const Area& a, const Area& b) { return a.id < b.id; });
  std::sort(passages_.begin(), passages_.end(),
            [](const Passage& a, const Passage& b) { return a.id < b.id; });
  bounds_.reserve(areas_.size());
  for (const Area& area : areas_) {
    Bounds b{area.polygon.front(), area.polygon.front()};
    for (const Vec2& v : area.polygon) {
      b.min = b.min.cwiseMin(v);
      b.max = b.max.cwiseMax(v);
    }
    bounds_.push_back(b);
  }
}

const Area* AreaGraph::FindArea(AreaId id) const {
  const auto it = std::lower_bound(
      areas_.begin(), areas_.end(), id,
      [](const Area& area, AreaId value) { return area.id < value; });
  return it != areas_.end() && it->id == id ? &*it : nullptr;
}

const Passage* AreaGraph::FindPassage(PassageId id) const {
  const auto it = std::lower_bound(
      passages_.begin(), passages_.end(), id,
      [](const Passage& passage, PassageId value) { return passage.id < value; });
  return it != passages_.end() && it->id == id ? &*it : nullptr;
}

bool AreaGraph::ContainsIndex(size_t index, const Vec2& p) const {
  constexpr double kOnBoundary = 1e-9;
  const Bounds& b = bounds_[index];
  if (p.x() < b.min.x() - kOnBoundary || p.y() < b.min.y() - kOnBoundary ||
      p.x() > b.max.x() + kOnBoundary || p.y() > b.max.y() + kOnBoundary) {
    return false;
  }
  const Polygon& polygon = areas_[index].polygon;
  return PointInPolygon(p, polygon) ||
         DistanceToBoundary(p, polygon) <= kOnBoundary;
}

std::optional<AreaId> AreaGraph::LocateArea(const Vec2& p) const {
  for (size_t i = 0; i < areas_.size(); ++i) {
    if (ContainsIndex(i, p)) return areas_[i].id;
  }
  return std::nullopt;
}

bool AreaGraph::Contains(AreaId id, const Vec2& p) const {
  const Area* area = FindArea(id);
  if (area == nullptr) return false;
  return ContainsIndex(static_cast<size_t>(area - areas_.data()), p);
}

GeoPoint DocumentOrigin(const OsmDocument& doc) {
  for (const RawNode& node : doc.nodes) {
    if (FindTag(node.tags, kTypeKey) == kTypeOrigin) return {node.lat, node.lon};
  }
  if (doc.nodes.empty()) return {};
  return {doc.nodes.front().lat, doc.nodes.front().lon};
}

std::set<int> LeafLevels(const OsmDocument& doc) {
  const internal::Interpretation interpretation = internal::Interpret(doc);
  std::set<int> levels;
  for (const auto& record : interpretation.areas) {
    if (record.level && !interpretation.parents.contains(record.way->id)) {
      levels.insert(*record.level);
    }
  }
  return levels;
}

AreaGraph LoadFloor(const OsmDocument& doc, int level) {
  const internal::Interpretation interpretation = internal::Interpret(doc);

  std::vector<Area> areas;
  for (const auto& record : interpretation.areas) {
    if (record.level != level ||
        interpretation.parents.contains(record.way->id)) {
      continue;
    }
    if (record.polygon.size() < 3) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("area {} has fewer than 3 vertices",
                              record.way->id));
    }
    Area area;
    area.id = record.way->id;
    area.polygon = record.polygon;
    if (SignedArea(area.polygon) < 0.) {
      std::reverse(area.polygon.begin(), area.polygon.end());
    }
    area.type = record.type.value_or(AreaType::kRoom);
    area.level = level;
    if (const auto name = FindTag(record.way->tags, kNameKey)) {
      area.name = std::string(*name);
    }
    area.parent = record.parent;
    areas.push_back(std::move(area));
  }
  if (areas.empty()) {
    throw Error(ErrorCode::kEmptyMap,
                fmt::format("no leaf areas on level {}", level));
  }
  std::sort(areas.begin(), areas.end(),
            [](const Area& a, const Area& b) { return a.id < b.id; });

  const auto is_loaded = [&](AreaId id) {
    return std::any_of(areas.begin(), areas.end(),
                       [id](const Area& a) { return a.id == id; });
  };
  const auto touches = [](const Area& area, const Vec2& p) {
    return DistanceToBoundary(p, area.polygon) <= kSnapTolerance;
  };

  std::vector<Passage> passages;
  for (const auto& record : interpretation.passages) {
    if (record.points.size() != 2 || record.points[0] == record.points[1]) {
      continue;
    }
    Passage passage;
    passage.id = record.way->id;
    passage.endpoints = {record.points[0], record.points[1]};
    passage.kind = record.kind.value_or(PassageKind::kDoor);

    std::vector<AreaId> connects;
    if (record.from) {
      if (is_loaded(*record.from)) connects.push_back(*record.from);
      if (record.to && is_loaded(*record.to)) connects.push_back(*record.to);
    } else {
      // No explicit endpoints: connect the areas whose boundary the passage
      // lies on.
      for (const Area& area : areas) {
        if (touches(area, passage.endpoints[0]) &&
            touches(area, passage.endpoints[1])) {
          connects.push_back(area.id);
        }
        if (connects.size() == 2) break;
      }
    }
    if (connects.empty()) continue;
    passage.from = connects[0];
    if (connects.size() > 1) passage.to = connects[1];
    passages.push_back(passage);
  }
  return AreaGraph(std::move(areas), std::move(passages),
                   interpretation.origin, level);
}

}  // namespace osmag
}  // namespace areagraph
