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

#ifndef AREAGRAPH_OSMAG_AREA_GRAPH_H_
#define AREAGRAPH_OSMAG_AREA_GRAPH_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "areagraph/common/geometry2d.h"
#include "areagraph/osmag/geodesy.h"
#include "areagraph/osmag/osm_document.h"

namespace areagraph {
namespace osmag {

// Tag vocabulary of the osmAG subset understood here.
inline constexpr std::string_view kTypeKey = "osmAG:type";
inline constexpr std::string_view kTypeArea = "area";
inline constexpr std::string_view kTypePassage = "passage";
inline constexpr std::string_view kTypeOrigin = "origin";
inline constexpr std::string_view kAreaTypeKey = "osmAG:areaType";
inline constexpr std::string_view kLevelKey = "level";
inline constexpr std::string_view kHeightKey = "height";
inline constexpr std::string_view kParentKey = "osmAG:parent";
inline constexpr std::string_view kNameKey = "name";
inline constexpr std::string_view kPassageTypeKey = "osmAG:passageType";
inline constexpr std::string_view kFromKey = "osmAG:from";
inline constexpr std::string_view kToKey = "osmAG:to";

// Passage endpoints must lie this close to an edge of each connected area.
inline constexpr double kSnapTolerance = 0.01;

using AreaId = OsmId;
using PassageId = OsmId;

enum class AreaType { kRoom, kCorridor, kStructure };
enum class PassageKind { kDoor, kTransparent };

std::optional<AreaType> ParseAreaType(std::string_view text);
std::optional<PassageKind> ParsePassageKind(std::string_view text);
std::string_view ToString(AreaType type);
std::string_view ToString(PassageKind kind);

struct Area {
  AreaId id = 0;
  Polygon polygon;  // Counter-clockwise, not closed (no repeated vertex).
  AreaType type = AreaType::kRoom;
  int level = 0;
  std::optional<std::string> name;
  std::optional<AreaId> parent;
};

struct Passage {
  PassageId id = 0;
  std::array<Vec2, 2> endpoints;
  PassageKind kind = PassageKind::kDoor;
  AreaId from = 0;
  std::optional<AreaId> to;  // Absent for exterior glass.
};

// The leaf areas of one floor with their passages, in a local metric frame.
// Immutable after construction and safe for concurrent reads.
class AreaGraph {
 public:
  AreaGraph(std::vector<Area> areas, std::vector<Passage> passages,
            GeoPoint origin, int level);

  const std::vector<Area>& areas() const { return areas_; }
  const std::vector<Passage>& passages() const { return passages_; }
  const GeoPoint& origin() const { return origin_; }
  int level() const { return level_; }

  const Area* FindArea(AreaId id) const;
  const Passage* FindPassage(PassageId id) const;

  // The leaf area containing 'p'. Points on a boundary shared by several areas
  // go to the area with the lowest id.
  std::optional<AreaId> LocateArea(const Vec2& p) const;

  // True if 'p' lies inside or on the boundary of the given area.
  bool Contains(AreaId id, const Vec2& p) const;

 private:
  struct Bounds {
    Vec2 min;
    Vec2 max;
  };

  bool ContainsIndex(size_t index, const Vec2& p) const;

  std::vector<Area> areas_;  // Sorted by id.
  std::vector<Bounds> bounds_;
  std::vector<Passage> passages_;  // Sorted by id.
  GeoPoint origin_;
  int level_;
};

// Origin of the local frame: the node tagged osmAG:type=origin, else the
// first node of the document.
GeoPoint DocumentOrigin(const OsmDocument& doc);

// Levels that carry at least one leaf area.
std::set<int> LeafLevels(const OsmDocument& doc);

// Leaf areas of 'level' and the passages touching them. Throws
// Error(kEmptyMap) when the level has no leaf area.
AreaGraph LoadFloor(const OsmDocument& doc, int level);

}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_OSMAG_AREA_GRAPH_H_
