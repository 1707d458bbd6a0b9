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

#include "areagraph/sim/simulator.h"

#include <cmath>
#include <limits>

#include "areagraph/common/error.h"
#include "areagraph/geometry/ray_caster.h"
#include "boost/random/mersenne_twister.hpp"
#include "boost/random/normal_distribution.hpp"
#include "boost/random/uniform_real_distribution.hpp"

namespace areagraph {
namespace sim {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Wall {
  Vec2 start;
  Vec2 end;
  BeamLabel label;
};

struct ClutterSpan {
  double entry = 0.;
  double exit = 0.;
  double height = 0.;
};

// Boundary pieces a beam can stop at: everything except open doors and glass.
std::vector<Wall> CollectWalls(const SimScene& scene) {
  std::vector<Wall> walls;
  for (const auto& segment : geometry::BuildBoundarySegments(*scene.map)) {
    BeamLabel label = BeamLabel::kWall;
    if (segment.ref.passage) {
      if (segment.passage_kind == osmag::PassageKind::kTransparent ||
          scene.door_state(*segment.ref.passage) == DoorState::kOpen) {
        continue;
      }
      label = BeamLabel::kDoor;
    }
    walls.push_back({segment.start, segment.end, label});
  }
  return walls;
}

// Entry and exit distances of the ray through the footprint; false when the
// ray misses it or starts inside it.
bool IntersectFootprint(const ClutterObject& object, const Vec2& origin,
                        const Vec2& direction, ClutterSpan* span) {
  if (object.shape == ClutterObject::Shape::kCylinder) {
    const Vec2 offset = origin - object.center;
    const double b = direction.dot(offset);
    const double c = offset.squaredNorm() - object.radius * object.radius;
    const double discriminant = b * b - c;
    if (discriminant <= 0.) return false;
    const double root = std::sqrt(discriminant);
    span->entry = -b - root;
    span->exit = -b + root;
    return span->entry > 0.;
  }
  const Polygon footprint = object.Footprint();
  double entry = kInfinity;
  double exit = -kInfinity;
  int crossings = 0;
  for (size_t i = 0; i < footprint.size(); ++i) {
    const auto hit = IntersectRaySegment(origin, direction, footprint[i],
                                         footprint[(i + 1) % footprint.size()],
                                         0., 0.);
    if (!hit) continue;
    ++crossings;
    entry = std::min(entry, hit->distance);
    exit = std::max(exit, hit->distance);
  }
  if (crossings < 2 || PointInPolygon(origin, footprint)) return false;
  span->entry = entry;
  span->exit = exit;
  return true;
}

}  // namespace

void SensorModel::Validate() const {
  if (rings < 1 || columns < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sensor needs rings, columns >= 1");
  }
  if (!(vfov_deg > 0. && vfov_deg < 180.)) {
    throw Error(ErrorCode::kInvalidArgument, "vfov must lie in (0, 180) degrees");
  }
  if (!(reflection_prob >= 0. && reflection_prob <= 1.)) {
    throw Error(ErrorCode::kInvalidArgument, "reflection_prob must lie in [0, 1]");
  }
  if (!(max_range > 0.) || !(range_noise_sigma >= 0.) ||
      !(reflection_extra_range >= 0.) || !(mount_height > 0.)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid sensor range parameters");
  }
}

double SensorModel::RingElevation(int ring) const {
  const double half = 0.5 * vfov_deg * M_PI / 180.;
  if (rings == 1) return 0.;
  return -half + 2. * half * ring / (rings - 1);
}

double SensorModel::ColumnAzimuth(int column) const {
  return (column + 0.5) * 2. * M_PI / columns;
}

std::string_view ToString(BeamLabel label) {
  switch (label) {
    case BeamLabel::kNone:
      return "none";
    case BeamLabel::kWall:
      return "wall";
    case BeamLabel::kDoor:
      return "door";
    case BeamLabel::kClutter:
      return "clutter";
    case BeamLabel::kFloor:
      return "floor";
    case BeamLabel::kCeiling:
      return "ceiling";
    case BeamLabel::kReflection:
      return "reflection";
  }
  return "none";
}

SimulatedScan SimulateScan(const SimScene& scene, const Pose2D& pose,
                           const SensorModel& model, std::uint64_t seed,
                           double timestamp) {
  model.Validate();
  if (scene.map == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "scene has no map");
  }
  const std::vector<Wall> walls = CollectWalls(scene);

  std::vector<double> tangent(model.rings);
  std::vector<double> cosine(model.rings);
  std::vector<double> sine(model.rings);
  for (int r = 0; r < model.rings; ++r) {
    const double e = model.RingElevation(r);
    tangent[r] = std::tan(e);
    cosine[r] = std::cos(e);
    sine[r] = std::sin(e);
  }

  boost::random::mt19937_64 rng(seed);
  boost::random::normal_distribution<double> gaussian(0., 1.);
  boost::random::uniform_real_distribution<double> unit(0., 1.);

  SimulatedScan out{scan::OrganizedScan(model.rings, model.columns, timestamp),
                    std::vector<BeamLabel>(
                        static_cast<size_t>(model.rings) * model.columns,
                        BeamLabel::kNone)};
  const Vec2 origin = pose.translation();
  const double mount = model.mount_height;
  std::vector<ClutterSpan> spans;

  for (int c = 0; c < model.columns; ++c) {
    const double azimuth = model.ColumnAzimuth(c);
    const double world_angle = pose.theta + azimuth;
    const Vec2 direction(std::cos(world_angle), std::sin(world_angle));

    double wall_distance = kInfinity;
    BeamLabel wall_label = BeamLabel::kWall;
    for (const Wall& wall : walls) {
      const auto hit = IntersectRaySegment(origin, direction, wall.start,
                                           wall.end, 1e-9, 1e-9);
      if (hit && hit->distance < wall_distance) {
        wall_distance = hit->distance;
        wall_label = wall.label;
      }
    }
    spans.clear();
    for (const ClutterObject& object : scene.clutter) {
      ClutterSpan span;
      span.height = object.height;
      if (IntersectFootprint(object, origin, direction, &span) &&
          span.entry < wall_distance) {
        spans.push_back(span);
      }
    }

    for (int r = 0; r < model.rings; ++r) {
      // Draw both variates for every beam so the stream never depends on
      // what the beam hits.
      const double noise = model.range_noise_sigma * gaussian(rng);
      const double reflection_draw = unit(rng);

      const double t = tangent[r];
      double distance = kInfinity;  // Horizontal.
      BeamLabel label = BeamLabel::kNone;
      const auto consider = [&](double d, BeamLabel l) {
        if (d > 0. && d < distance) {
          distance = d;
          label = l;
        }
      };
      if (t < 0.) consider(mount / -t, BeamLabel::kFloor);
      if (t > 0.) consider((scene.wall_height - mount) / t, BeamLabel::kCeiling);
      if (std::isfinite(wall_distance)) {
        const double z = mount + wall_distance * t;
        if (z >= 0. && z <= scene.wall_height) consider(wall_distance, wall_label);
      }
      for (const ClutterSpan& span : spans) {
        const double z_entry = mount + span.entry * t;
        if (z_entry >= 0. && z_entry <= span.height) {
          consider(span.entry, BeamLabel::kClutter);
        } else if (t < 0. && z_entry > span.height) {
          const double d_top = (mount - span.height) / -t;
          if (d_top <= span.exit) consider(d_top, BeamLabel::kClutter);
        }
      }
      if (label == BeamLabel::kNone) continue;

      double range = distance / cosine[r] + noise;
      if ((label == BeamLabel::kWall || label == BeamLabel::kDoor) &&
          reflection_draw < model.reflection_prob) {
        range += model.reflection_extra_range;
        label = BeamLabel::kReflection;
      }
      if (!(range > 0.) || range > model.max_range) continue;
      const double planar = range * cosine[r];
      out.scan.Set(r, c, Vec3(planar * std::cos(azimuth),
                              planar * std::sin(azimuth), range * sine[r]));
      out.labels[static_cast<size_t>(r) * model.columns + c] = label;
    }
  }
  return out;
}

std::uint64_t FrameSeed(std::uint64_t base, std::uint64_t index) {
  // SplitMix64 finalizer.
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vec2 WifiPrior(const Pose2D& truth, double max_error, std::uint64_t seed) {
  if (!(max_error >= 0.)) {
    throw Error(ErrorCode::kInvalidArgument, "max_error must be >= 0");
  }
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_real_distribution<double> unit(0., 1.);
  const double r = max_error * std::sqrt(unit(rng));
  const double a = 2. * M_PI * unit(rng);
  return truth.translation() + Vec2(r * std::cos(a), r * std::sin(a));
}

}  // namespace sim
}  // namespace areagraph
