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

#ifndef AREAGRAPH_SCAN_ORGANIZED_SCAN_H_
#define AREAGRAPH_SCAN_ORGANIZED_SCAN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "areagraph/common/geometry2d.h"

namespace areagraph {
namespace scan {

// A return of a multi-ring LiDAR before it is sorted into columns.
struct RingPoint {
  Vec3 xyz;  // Sensor frame, meters.
  int ring = 0;
};

// rings x columns matrix of returns. Column j holds the returns whose azimuth
// falls into bin j of 'columns' uniform bins over [0, 2 pi).
class OrganizedScan {
 public:
  OrganizedScan(int rings, int columns, double timestamp = 0.);

  int rings() const { return rings_; }
  int columns() const { return columns_; }
  double timestamp() const { return timestamp_; }
  void set_timestamp(double timestamp) { timestamp_ = timestamp; }

  bool valid(int ring, int column) const { return valid_[Index(ring, column)]; }
  const Vec3& point(int ring, int column) const {
    return points_[Index(ring, column)];
  }
  void Set(int ring, int column, const Vec3& p) {
    points_[Index(ring, column)] = p;
    valid_[Index(ring, column)] = 1;
  }
  void Invalidate(int ring, int column) { valid_[Index(ring, column)] = 0; }

  int CountValid() const;

 private:
  size_t Index(int ring, int column) const {
    return static_cast<size_t>(ring) * columns_ + column;
  }

  int rings_;
  int columns_;
  double timestamp_;
  std::vector<Vec3> points_;
  std::vector<std::uint8_t> valid_;
};

// Planar points, at most one per source column, in column order.
struct ClutterFreePointSet {
  std::vector<Vec2> points;
  std::vector<int> column_of;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Defaults for a sensor mounted about a meter above the floor.
inline constexpr double kDefaultZLow = -0.3;
inline constexpr double kDefaultZHigh = 1.5;

// Azimuth bin of a sensor-frame point, in [0, columns).
int AzimuthBin(const Vec3& p, int columns);

// Sorts returns into their (ring, azimuth bin) cell. When two returns of one
// ring share a bin, the nearer one is kept. Returns at the sensor origin are
// dropped.
OrganizedScan Organize(std::span<const RingPoint> raw, int rings, int columns,
                       double timestamp = 0.);

// Invalidates returns with z outside [z_low, z_high] (sensor frame).
OrganizedScan HeightFilter(const OrganizedScan& scan, double z_low = kDefaultZLow,
                           double z_high = kDefaultZHigh);

// Keeps, per column, the valid return farthest from the sensor in the plane.
// Ties go to the lowest ring index.
ClutterFreePointSet ClutterFreeSubsample(const OrganizedScan& scan);

// HeightFilter followed by ClutterFreeSubsample.
ClutterFreePointSet ExtractClutterFree(const OrganizedScan& scan,
                                       double z_low = kDefaultZLow,
                                       double z_high = kDefaultZHigh);

}  // namespace scan
}  // namespace areagraph

#endif  // AREAGRAPH_SCAN_ORGANIZED_SCAN_H_
