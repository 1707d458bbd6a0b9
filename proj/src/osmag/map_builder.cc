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

#include "areagraph/osmag/map_builder.h"

#include <algorithm>

#include "areagraph/common/error.h"

namespace areagraph {
namespace osmag {

MapBuilder::MapBuilder(GeoPoint origin) : origin_(origin) {
  RawNode node;
  node.id = next_node_id_++;
  node.lat = origin.lat;
  node.lon = origin.lon;
  node.tags.push_back({std::string(kTypeKey), std::string(kTypeOrigin)});
  doc_.nodes.push_back(node);
}

OsmId MapBuilder::NodeFor(const Vec2& p) {
  const auto key = std::make_pair(p.x(), p.y());
  const auto it = node_ids_.find(key);
  if (it != node_ids_.end()) return it->second;
  const GeoPoint geo = FromLocalFrame(p, origin_);
  RawNode node;
  node.id = next_node_id_++;
  node.lat = geo.lat;
  node.lon = geo.lon;
  doc_.nodes.push_back(node);
  node_ids_.emplace(key, node.id);
  return node.id;
}

RawWay& MapBuilder::NewWay() {
  RawWay way;
  way.id = next_way_id_++;
  doc_.ways.push_back(std::move(way));
  return doc_.ways.back();
}

AreaId MapBuilder::AddArea(const Polygon& polygon, AreaType type, int level,
                           std::optional<AreaId> parent,
                           const std::string& name) {
  if (polygon.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "area needs at least 3 vertices");
  }
  std::vector<OsmId> refs;
  for (const Vec2& v : polygon) refs.push_back(NodeFor(v));
  refs.push_back(refs.front());
  RawWay& way = NewWay();
  way.node_refs = std::move(refs);
  way.tags.push_back({std::string(kTypeKey), std::string(kTypeArea)});
  way.tags.push_back({std::string(kAreaTypeKey), std::string(ToString(type))});
  way.tags.push_back({std::string(kLevelKey), std::to_string(level)});
  if (parent) {
    way.tags.push_back({std::string(kParentKey), std::to_string(*parent)});
  }
  if (!name.empty()) way.tags.push_back({std::string(kNameKey), name});
  return way.id;
}

PassageId MapBuilder::AddPassage(const Vec2& a, const Vec2& b, PassageKind kind,
                                 AreaId from, std::optional<AreaId> to) {
  const OsmId na = NodeFor(a);
  const OsmId nb = NodeFor(b);
  RawWay& way = NewWay();
  way.node_refs = {na, nb};
  way.tags.push_back({std::string(kTypeKey), std::string(kTypePassage)});
  way.tags.push_back(
      {std::string(kPassageTypeKey), std::string(ToString(kind))});
  way.tags.push_back({std::string(kFromKey), std::to_string(from)});
  if (to) way.tags.push_back({std::string(kToKey), std::to_string(*to)});
  return way.id;
}

void MapBuilder::AddTag(OsmId way_id, const std::string& key,
                        const std::string& value) {
  const auto it = std::find_if(doc_.ways.begin(), doc_.ways.end(),
                               [&](const RawWay& w) { return w.id == way_id; });
  if (it == doc_.ways.end()) {
    throw Error(ErrorCode::kReference, "no way " + std::to_string(way_id));
  }
  for (Tag& tag : it->tags) {
    if (tag.key == key) {
      tag.value = value;
      return;
    }
  }
  it->tags.push_back({key, value});
}

OsmDocument MapBuilder::Build() const { return doc_; }

}  // namespace osmag
}  // namespace areagraph
