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

#ifndef AREAGRAPH_OSMAG_GEODESY_H_
#define AREAGRAPH_OSMAG_GEODESY_H_

#include "areagraph/common/geometry2d.h"

namespace areagraph {
namespace osmag {

// WGS84 equatorial radius.
inline constexpr double kEarthRadius = 6378137.;

// Largest latitude offset from the origin for which the local tangent-plane
// approximation is accepted.
inline constexpr double kMaxLatitudeOffsetDegrees = 0.1;

struct GeoPoint {
  double lat = 0.;  // Degrees.
  double lon = 0.;  // Degrees.
};

// Equirectangular projection about 'origin': x east, y north, meters.
// Throws Error(kOutOfRange) if 'p' is too far from the origin in latitude.
Vec2 ToLocalFrame(const GeoPoint& p, const GeoPoint& origin);

// Exact inverse of ToLocalFrame.
GeoPoint FromLocalFrame(const Vec2& p, const GeoPoint& origin);

}  // namespace osmag
}  // namespace areagraph

#endif  // AREAGRAPH_OSMAG_GEODESY_H_
