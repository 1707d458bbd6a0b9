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

#ifndef AREAGRAPH_TOOLS_CLI_SVG_H_
#define AREAGRAPH_TOOLS_CLI_SVG_H_

#include <string>
#include <vector>

#include "areagraph/common/trajectory.h"
#include "areagraph/osmag/area_graph.h"

namespace areagraph {
namespace cli {

struct SvgTrajectory {
  std::string name;
  std::vector<TrajectoryRow> rows;
  // Per row position error in meters, NaN where unknown. Empty: no errors.
  std::vector<double> errors;
};

// Error of every row against the nearest truth row within max_dt, NaN when
// there is none.
std::vector<double> RowErrors(const std::vector<TrajectoryRow>& estimate,
                              const std::vector<TrajectoryRow>& truth, double max_dt = 0.05);

// Areas as one path each, passages as separate strokes (doors solid, glass
// dashed), trajectories as a polyline with one colored vertex marker per row:
// green at zero error to red at 0.5 m and above.
std::string RenderSvg(const osmag::AreaGraph& map,
                      const std::vector<SvgTrajectory>& trajectories);

}  // namespace cli
}  // namespace areagraph

#endif  // AREAGRAPH_TOOLS_CLI_SVG_H_
