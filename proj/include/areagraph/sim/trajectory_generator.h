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

#ifndef AREAGRAPH_SIM_TRAJECTORY_GENERATOR_H_
#define AREAGRAPH_SIM_TRAJECTORY_GENERATOR_H_

#include <vector>

#include "areagraph/common/trajectory.h"
#include "areagraph/osmag/area_graph.h"

namespace areagraph {
namespace sim {

// Replaces every interior corner by a quadratic curve tangent to both legs,
// cut at most 'radius' from the corner (less on short legs), sampled finely
// enough that the heading never turns by more than about 5 degrees at once.
std::vector<Vec2> RoundCorners(const std::vector<Vec2>& waypoints, double radius);

// Constant-speed walk along the polyline, one pose every 1 / frame_rate
// seconds starting at t = 0, heading along the current leg. A single
// waypoint yields one pose. With a map, every waypoint must lie in an area
// (Error(kPoseOutOfMap)) and no leg may cross a wall other than through a
// passage (Error(kInvalidArgument)).
std::vector<TrajectoryRow> GenerateTrajectory(const std::vector<Vec2>& waypoints,
                                              double speed, double frame_rate,
                                              const osmag::AreaGraph* map = nullptr);

}  // namespace sim
}  // namespace areagraph

#endif  // AREAGRAPH_SIM_TRAJECTORY_GENERATOR_H_
