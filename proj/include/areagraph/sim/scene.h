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

#ifndef AREAGRAPH_SIM_SCENE_H_
#define AREAGRAPH_SIM_SCENE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "areagraph/common/geometry2d.h"
#include "areagraph/osmag/area_graph.h"

namespace areagraph {
namespace sim {

// A piece of furniture: an extruded box or cylinder standing on the floor.
struct ClutterObject {
  enum class Shape { kBox, kCylinder };

  Shape shape = Shape::kBox;
  Vec2 center = Vec2::Zero();
  Vec2 half_extents = Vec2::Zero();  // Box only, in the box frame.
  double yaw = 0.;                   // Box only.
  double radius = 0.;                // Cylinder only.
  double height = 1.;
  osmag::AreaId container = 0;

  // Box corners (counter-clockwise), or a 16-gon for cylinders.
  Polygon Footprint() const;
  // Largest distance from the center to the footprint.
  double BoundingRadius() const;

  friend bool operator==(const ClutterObject&, const ClutterObject&) = default;
};

enum class DoorState { kOpen, kClosed };

struct SimScene {
  const osmag::AreaGraph* map = nullptr;
  double wall_height = 3.;
  std::vector<ClutterObject> clutter;
  std::map<osmag::PassageId, DoorState> door_states;  // Default: open.
  std::uint64_t seed = 0;

  DoorState door_state(osmag::PassageId id) const;
};

struct ClutterParams {
  double density = 0.;  // Objects per square meter of floor.
  double min_height = 0.5;
  double max_height = 1.5;
  double min_box_side = 0.3;
  double max_box_side = 1.2;
  double min_radius = 0.15;
  double max_radius = 0.5;
  // Minimum gap between a footprint and its container's boundary.
  double wall_clearance = 0.05;
  // Footprints stay this far from every keep-out polyline (e.g. the path).
  double path_clearance = 0.;
  std::vector<std::vector<Vec2>> keep_out;
  int max_attempts = 1000;
};

// round(area * density) objects per non-structure area, rejection sampled.
// Deterministic in 'seed'. Throws Error(kPlacement) when an object cannot
// be placed within max_attempts tries, Error(kInvalidArgument) on a
// negative density.
std::vector<ClutterObject> GenerateClutter(const osmag::AreaGraph& map,
                                           const ClutterParams& params,
                                           std::uint64_t seed);

}  // namespace sim
}  // namespace areagraph

#endif  // AREAGRAPH_SIM_SCENE_H_
