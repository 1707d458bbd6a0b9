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

#include "areagraph/sim/scene.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "areagraph/common/error.h"
#include "boost/random/bernoulli_distribution.hpp"
#include "boost/random/mersenne_twister.hpp"
#include "boost/random/uniform_real_distribution.hpp"
#include "fmt/format.h"

namespace areagraph {
namespace sim {
namespace {

double DistanceToPolyline(const Vec2& p, const std::vector<Vec2>& line) {
  if (line.empty()) return std::numeric_limits<double>::infinity();
  if (line.size() == 1) return (p - line.front()).norm();
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    best = std::min(best, DistanceToSegment(p, line[i], line[i + 1]));
  }
  return best;
}

bool FitsInside(const ClutterObject& object, const Polygon& container,
                double clearance) {
  if (!PointInPolygon(object.center, container)) return false;
  if (object.shape == ClutterObject::Shape::kCylinder) {
    return DistanceToBoundary(object.center, container) >=
           object.radius + clearance;
  }
  const Polygon footprint = object.Footprint();
  for (const Vec2& corner : footprint) {
    if (!PointInPolygon(corner, container) ||
        DistanceToBoundary(corner, container) < clearance) {
      return false;
    }
  }
  for (const Vec2& vertex : container) {
    if (PointInPolygon(vertex, footprint) ||
        DistanceToBoundary(vertex, footprint) < clearance) {
      return false;
    }
  }
  const size_t n = container.size();
  for (size_t i = 0; i < footprint.size(); ++i) {
    const Vec2& a = footprint[i];
    const Vec2& b = footprint[(i + 1) % footprint.size()];
    for (size_t j = 0; j < n; ++j) {
      if (SegmentsIntersect(a, b, container[j], container[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Polygon ClutterObject::Footprint() const {
  Polygon polygon;
  if (shape == Shape::kCylinder) {
    constexpr int kSides = 16;
    for (int i = 0; i < kSides; ++i) {
      const double a = 2. * M_PI * i / kSides;
      polygon.push_back(center + radius * Vec2(std::cos(a), std::sin(a)));
    }
    return polygon;
  }
  const Vec2 u(std::cos(yaw), std::sin(yaw));
  const Vec2 v(-u.y(), u.x());
  const Vec2 du = half_extents.x() * u;
  const Vec2 dv = half_extents.y() * v;
  return {center - du - dv, center + du - dv, center + du + dv, center - du + dv};
}

double ClutterObject::BoundingRadius() const {
  return shape == Shape::kCylinder ? radius : half_extents.norm();
}

DoorState SimScene::door_state(osmag::PassageId id) const {
  const auto it = door_states.find(id);
  return it == door_states.end() ? DoorState::kOpen : it->second;
}

std::vector<ClutterObject> GenerateClutter(const osmag::AreaGraph& map,
                                           const ClutterParams& params,
                                           std::uint64_t seed) {
  if (!(params.density >= 0.)) {
    throw Error(ErrorCode::kInvalidArgument, "clutter density must be >= 0");
  }
  std::vector<ClutterObject> objects;
  if (params.density == 0.) return objects;

  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_real_distribution<double> unit(0., 1.);
  boost::random::bernoulli_distribution<double> coin(0.5);
  const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  for (const osmag::Area& area : map.areas()) {
    if (area.type == osmag::AreaType::kStructure) continue;
    const long count = std::lround(SignedArea(area.polygon) * params.density);
    Vec2 lo = area.polygon.front();
    Vec2 hi = lo;
    for (const Vec2& v : area.polygon) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    for (long k = 0; k < count; ++k) {
      bool placed = false;
      for (int attempt = 0; attempt < params.max_attempts && !placed; ++attempt) {
        ClutterObject object;
        object.container = area.id;
        object.shape = coin(rng) ? ClutterObject::Shape::kBox
                                 : ClutterObject::Shape::kCylinder;
        object.half_extents = 0.5 * Vec2(uniform(params.min_box_side, params.max_box_side),
                                         uniform(params.min_box_side, params.max_box_side));
        object.yaw = uniform(0., M_PI);
        object.radius = uniform(params.min_radius, params.max_radius);
        if (object.shape == ClutterObject::Shape::kBox) {
          object.radius = 0.;
        } else {
          object.half_extents = Vec2::Zero();
          object.yaw = 0.;
        }
        object.height = uniform(params.min_height, params.max_height);
        object.center = Vec2(uniform(lo.x(), hi.x()), uniform(lo.y(), hi.y()));

        if (!FitsInside(object, area.polygon, params.wall_clearance)) continue;
        const double reach = object.BoundingRadius() + params.path_clearance;
        const bool blocks_path = std::any_of(
            params.keep_out.begin(), params.keep_out.end(),
            [&](const std::vector<Vec2>& line) {
              return DistanceToPolyline(object.center, line) < reach;
            });
        if (blocks_path) continue;
        objects.push_back(object);
        placed = true;
      }
      if (!placed) {
        throw Error(ErrorCode::kPlacement,
                    fmt::format("could not place clutter object {} of {} in area {}",
                                k + 1, count, area.id));
      }
    }
  }
  return objects;
}

}  // namespace sim
}  // namespace areagraph
