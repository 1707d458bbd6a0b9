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

// Interpretation of raw OSM ways as osmAG areas and passages, shared by the
// floor loader and the validator.

#ifndef AREAGRAPH_SRC_OSMAG_SCHEMA_H_
#define AREAGRAPH_SRC_OSMAG_SCHEMA_H_

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "areagraph/osmag/area_graph.h"

namespace areagraph {
namespace osmag {
namespace internal {

struct AreaRecord {
  const RawWay* way = nullptr;
  Polygon polygon;  // As stored in the file, closing vertex removed.
  bool closed = false;
  std::optional<AreaType> type;
  std::optional<int> level;
  std::optional<AreaId> parent;
};

struct PassageRecord {
  const RawWay* way = nullptr;
  std::vector<Vec2> points;
  std::optional<PassageKind> kind;
  std::optional<AreaId> from;
  std::optional<AreaId> to;
};

struct Interpretation {
  GeoPoint origin;
  std::vector<AreaRecord> areas;
  std::vector<PassageRecord> passages;
  std::unordered_set<AreaId> parents;  // Ids referenced as osmAG:parent.
};

Interpretation Interpret(const OsmDocument& doc);

std::optional<OsmId> ParseId(std::string_view text);
std::optional<int> ParseInt(std::string_view text);

}  // namespace internal
}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_SRC_OSMAG_SCHEMA_H_
