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

#ifndef AREAGRAPH_SIM_SCENES_H_
#define AREAGRAPH_SIM_SCENES_H_

#include <optional>
#include <string_view>
#include <vector>

#include "areagraph/osmag/area_graph.h"
#include "areagraph/osmag/osm_document.h"

namespace areagraph {
namespace sim {

// Built-in floor plans, all on level 0 in meters about the builder origin.

// One room, (0, 0) to (size, size).
osmag::OsmDocument SquareRoomMap(double size = 10.);

// [0,10]x[0,10] and [10,15]x[0,10] joined by a passage at x = 10, y in [4, 6].
osmag::OsmDocument TwoRoomMap(osmag::PassageKind kind = osmag::PassageKind::kDoor);

// About 105 m^2, L-shaped with a notch so no rotation maps it onto itself.
osmag::OsmDocument ClutteredRoomMap();

// A corridor [0, length] x [0, width]. With side rooms, three rooms open
// onto it at irregular spacing.
osmag::OsmDocument CorridorMap(double length = 30., double width = 2.5,
                               bool side_rooms = true);

// A 30 m corridor with four rooms above and three below, doors into each,
// two doors between rooms and a glass wall, all inside a building area.
osmag::OsmDocument OfficeMap();

// Closed loop of about 50 m through the office: two rooms above and below
// the corridor, through the doorway between the lower rooms. Corners not
// yet rounded.
std::vector<Vec2> OfficeLoopWaypoints();

// "square", "two_rooms", "room", "corridor", "plain_corridor", "office".
std::optional<osmag::OsmDocument> BuiltinMap(std::string_view name);

}  // namespace sim
}  // namespace areagraph

#endif  // AREAGRAPH_SIM_SCENES_H_
