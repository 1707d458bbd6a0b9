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

#ifndef AREAGRAPH_SIM_SCENE_CONFIG_H_
#define AREAGRAPH_SIM_SCENE_CONFIG_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "areagraph/common/trajectory.h"
#include "areagraph/osmag/area_graph.h"
#include "areagraph/osmag/osm_document.h"
#include "areagraph/sim/scene.h"
#include "areagraph/sim/simulator.h"

namespace areagraph {
namespace sim {

// INI scene description. Comments go on their own line, starting with ';'.
//
//   [scene]
//   ; a map file relative to the config file, or 'builtin = office'
//   map = office.osm
//   level = 0
//   wall_height = 3
//   seed = 7
//   [clutter]
//   density = 0.1
//   ; keeps furniture off the trajectory
//   path_clearance = 0.6
//   [sensor]
//   ; any SensorModel field by name
//   rings = 64
//   [doors]
//   ; passage id = open | closed
//   1017 = closed
//   [trajectory]
//   waypoints = 12.5,6; 11,5; 11,1.25
//   speed = 1.0
//   frame_rate = 10
//   corner_radius = 0.8
struct SceneConfig {
  std::string map_path;
  std::string builtin;
  int level = 0;
  double wall_height = 3.;
  std::uint64_t seed = 1;
  ClutterParams clutter;
  SensorModel sensor;
  std::map<osmag::PassageId, DoorState> doors;
  std::vector<Vec2> waypoints;
  double speed = 1.;
  double frame_rate = 10.;
  double corner_radius = 0.8;
};

// Throws ParseError on malformed text, Error(kInvalidArgument) on bad values.
SceneConfig ParseSceneConfig(std::string_view text, const std::string& base_dir = ".");
SceneConfig LoadSceneConfig(const std::string& path);

// The map named by the config (file or built-in).
osmag::OsmDocument LoadSceneMap(const SceneConfig& config);

// A loaded scene: the floor, its furniture and the ground-truth path.
struct SceneInstance {
  std::unique_ptr<osmag::AreaGraph> map;
  SimScene scene;  // scene.map points into 'map'.
  std::vector<Vec2> path;  // Waypoints after corner rounding.
  std::vector<TrajectoryRow> trajectory;  // Empty without waypoints.
};

// Loads the map, rounds the trajectory corners, walks it and places clutter
// (keeping path_clearance from the path). Clutter uses the scene seed.
SceneInstance InstantiateScene(const SceneConfig& config);

// "x,y; x,y; ..."
std::vector<Vec2> ParseWaypoints(std::string_view text);

}  // namespace sim
}  // namespace areagraph

#endif  // AREAGRAPH_SIM_SCENE_CONFIG_H_
