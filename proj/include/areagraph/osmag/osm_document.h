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

#ifndef AREAGRAPH_OSMAG_OSM_DOCUMENT_H_
#define AREAGRAPH_OSMAG_OSM_DOCUMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace areagraph {
namespace osmag {

using OsmId = std::int64_t;

struct Tag {
  std::string key;
  std::string value;

  friend bool operator==(const Tag&, const Tag&) = default;
};

struct RawNode {
  OsmId id = 0;
  double lat = 0.;
  double lon = 0.;
  std::vector<Tag> tags;
  int line = 0;  // Source line, 0 when built in memory.
};

struct RawWay {
  OsmId id = 0;
  std::vector<OsmId> node_refs;
  std::vector<Tag> tags;
  int line = 0;
};

// The raw content of an OSM XML file restricted to nodes, ways and tags.
// Everything is kept, including tags this library does not interpret.
struct OsmDocument {
  std::vector<RawNode> nodes;
  std::vector<RawWay> ways;
};

// Structural equality: same nodes, ways, refs and tags in the same order.
// Source line numbers are ignored.
bool StructurallyEqual(const OsmDocument& a, const OsmDocument& b);

std::optional<std::string_view> FindTag(const std::vector<Tag>& tags,
                                        std::string_view key);

// Node id -> index into doc.nodes.
std::unordered_map<OsmId, size_t> BuildNodeIndex(const OsmDocument& doc);

// Throws ParseError (with line number) on malformed XML, bad attributes or
// duplicate ids, and Error(kReference) when a way references a missing node.
OsmDocument ParseOsm(std::string_view xml);
OsmDocument ReadOsmFile(const std::string& path);

std::string SerializeOsm(const OsmDocument& doc);
void WriteOsmFile(const OsmDocument& doc, const std::string& path);

}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_OSMAG_OSM_DOCUMENT_H_
