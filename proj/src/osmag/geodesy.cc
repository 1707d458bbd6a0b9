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

#include "areagraph/osmag/geodesy.h"

#include <cmath>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {
namespace osmag {
namespace {

constexpr double kDegToRad = M_PI / 180.;

}  // namespace

Vec2 ToLocalFrame(const GeoPoint& p, const GeoPoint& origin) {
  const double dlat = p.lat - origin.lat;
  if (!(std::abs(dlat) < kMaxLatitudeOffsetDegrees)) {
    throw Error(ErrorCode::kOutOfRange,
                fmt::format("latitude {} is more than {} degrees from the "
                            "local frame origin {}",
                            p.lat, kMaxLatitudeOffsetDegrees, origin.lat));
  }
  const double dlon = p.lon - origin.lon;
  return {kEarthRadius * std::cos(origin.lat * kDegToRad) * dlon * kDegToRad,
          kEarthRadius * dlat * kDegToRad};
}

GeoPoint FromLocalFrame(const Vec2& p, const GeoPoint& origin) {
  const double dlat = p.y() / kEarthRadius / kDegToRad;
  const double dlon =
      p.x() / (kEarthRadius * std::cos(origin.lat * kDegToRad)) / kDegToRad;
  return {origin.lat + dlat, origin.lon + dlon};
}

}  // namespace osmag
}  // namespace areagraph
