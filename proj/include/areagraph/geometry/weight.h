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

#ifndef AREAGRAPH_GEOMETRY_WEIGHT_H_
#define AREAGRAPH_GEOMETRY_WEIGHT_H_

#include <cmath>

namespace areagraph {
namespace geometry {

// Weight of a scan point given its signed distance to the map. Peaks at 1 for
// sd = 0, falls off faster inside the area (clutter) than outside, and is
// zero for sd <= -1 and sd >= 3 (clutter far in front of the wall, and long
// returns such as reflections).
inline double Weight(double sd) {
  if (sd <= -1.) return 0.;
  if (sd <= 0.) return 1. / (1.5 * std::abs(sd) + 1.);
  if (sd < 3.) return 1. / (3. * sd + 1.);
  return 0.;
}

}  // namespace geometry
}  // namespace areagraph

#endif  // AREAGRAPH_GEOMETRY_WEIGHT_H_
