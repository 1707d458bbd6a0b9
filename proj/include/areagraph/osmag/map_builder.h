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

#ifndef AREAGRAPH_OSMAG_MAP_BUILDER_H_
#define AREAGRAPH_OSMAG_MAP_BUILDER_H_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "areagraph/osmag/area_graph.h"
#include "areagraph/osmag/osm_document.h"

namespace areagraph {
namespace osmag {

// Assembles an osmAG document from metric geometry. Vertices with identical
// coordinates share one node, so adjacent areas reference common nodes the
// way hand-drawn osmAG files do.
class MapBuilder {
 public:
  explicit MapBuilder(GeoPoint origin = {31.1790, 121.5900});

  AreaId AddArea(const Polygon& polygon, AreaType type, int level,
                 std::optional<AreaId> parent = std::nullopt,
                 const std::string& name = "");

  // A passage with explicit osmAG:from/osmAG:to tags.
  PassageId AddPassage(const Vec2& a, const Vec2& b, PassageKind kind,
                       AreaId from, std::optional<AreaId> to);

  // Sets a tag on an already added way, replacing any previous value.
  void AddTag(OsmId way_id, const std::string& key, const std::string& value);

  OsmDocument Build() const;

 private:
  OsmId NodeFor(const Vec2& p);
  RawWay& NewWay();

  GeoPoint origin_;
  OsmDocument doc_;
  std::map<std::pair<double, double>, OsmId> node_ids_;
  OsmId next_node_id_ = 1;
  OsmId next_way_id_ = 1001;
};

}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_OSMAG_MAP_BUILDER_H_
