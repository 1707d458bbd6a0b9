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

#ifndef AREAGRAPH_OSMAG_VALIDATION_H_
#define AREAGRAPH_OSMAG_VALIDATION_H_

#include <string>
#include <vector>

#include "areagraph/osmag/osm_document.h"

namespace areagraph {
namespace osmag {

struct Violation {
  // Stable machine-readable name, e.g. "self_intersecting_polygon".
  std::string code;
  OsmId element_id = 0;
  std::string message;
};

// Checks every osmAG invariant on a parsed document:
//   too_few_vertices, area_not_closed, self_intersecting_polygon,
//   unknown_area_type, unknown_level, missing_parent,
//   passage_node_count, passage_degenerate, unknown_passage_type,
//   missing_connected_area, snap_tolerance, area_overlap.
std::vector<Violation> ValidateDocument(const OsmDocument& doc);

}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_OSMAG_VALIDATION_H_
