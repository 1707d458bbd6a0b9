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

#include "areagraph/scan/organized_scan.h"

#include <algorithm>
#include <cmath>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {
namespace scan {
namespace {

// Returns closer than this are sensor self-returns.
constexpr double kMinRange = 1e-6;

}  // namespace

OrganizedScan::OrganizedScan(int rings, int columns, double timestamp)
    : rings_(rings), columns_(columns), timestamp_(timestamp) {
  if (rings < 1 || columns < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("scan needs at least one ring and one column, got "
                            "{}x{}",
                            rings, columns));
  }
  const size_t n = static_cast<size_t>(rings) * columns;
  points_.assign(n, Vec3::Zero());
  valid_.assign(n, 0);
}

int OrganizedScan::CountValid() const {
  return static_cast<int>(std::count(valid_.begin(), valid_.end(), 1));
}

int AzimuthBin(const Vec3& p, int columns) {
  double azimuth = std::atan2(p.y(), p.x());
  if (azimuth < 0.) azimuth += 2. * M_PI;
  int bin = static_cast<int>(std::floor(azimuth * columns / (2. * M_PI)));
  if (bin >= columns) bin -= columns;
  if (bin < 0) bin += columns;
  return bin;
}

OrganizedScan Organize(std::span<const RingPoint> raw, int rings, int columns,
                       double timestamp) {
  OrganizedScan scan(rings, columns, timestamp);
  for (const RingPoint& rp : raw) {
    if (rp.ring < 0 || rp.ring >= rings) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("ring label {} outside [0, {})", rp.ring, rings));
    }
    if (!rp.xyz.allFinite() || rp.xyz.norm() < kMinRange) continue;
    const int column = AzimuthBin(rp.xyz, columns);
    if (scan.valid(rp.ring, column) &&
        scan.point(rp.ring, column).norm() <= rp.xyz.norm()) {
      continue;
    }
    scan.Set(rp.ring, column, rp.xyz);
  }
  return scan;
}

OrganizedScan HeightFilter(const OrganizedScan& scan, double z_low,
                           double z_high) {
  if (!(z_low < z_high)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("height band [{}, {}] is empty", z_low, z_high));
  }
  OrganizedScan filtered = scan;
  for (int ring = 0; ring < scan.rings(); ++ring) {
    for (int column = 0; column < scan.columns(); ++column) {
      if (!scan.valid(ring, column)) continue;
      const double z = scan.point(ring, column).z();
      if (z < z_low || z > z_high) filtered.Invalidate(ring, column);
    }
  }
  return filtered;
}

ClutterFreePointSet ClutterFreeSubsample(const OrganizedScan& scan) {
  ClutterFreePointSet result;
  for (int column = 0; column < scan.columns(); ++column) {
    int best_ring = -1;
    double best_range = -1.;
    for (int ring = 0; ring < scan.rings(); ++ring) {
      if (!scan.valid(ring, column)) continue;
      const Vec3& p = scan.point(ring, column);
      const double planar = std::hypot(p.x(), p.y());
      if (planar > best_range) {
        best_range = planar;
        best_ring = ring;
      }
    }
    if (best_ring < 0) continue;
    const Vec3& p = scan.point(best_ring, column);
    result.points.emplace_back(p.x(), p.y());
    result.column_of.push_back(column);
  }
  return result;
}

ClutterFreePointSet ExtractClutterFree(const OrganizedScan& scan, double z_low,
                                       double z_high) {
  return ClutterFreeSubsample(HeightFilter(scan, z_low, z_high));
}

}  // namespace scan
}  // namespace areagraph
