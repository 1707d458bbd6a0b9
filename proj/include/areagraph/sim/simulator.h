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

#ifndef AREAGRAPH_SIM_SIMULATOR_H_
#define AREAGRAPH_SIM_SIMULATOR_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "areagraph/common/pose2d.h"
#include "areagraph/scan/organized_scan.h"
#include "areagraph/sim/scene.h"

namespace areagraph {
namespace sim {

struct SensorModel {
  int rings = 64;
  int columns = 600;
  double vfov_deg = 104.2;  // Symmetric about the horizon.
  double max_range = 30.;
  double range_noise_sigma = 0.01;
  double reflection_prob = 0.01;
  double reflection_extra_range = 5.;
  double mount_height = 1.;  // Above the floor.

  // Throws Error(kInvalidArgument) when out of range.
  void Validate() const;
  // Elevation of 'ring' in radians; ring 0 looks down the most.
  double RingElevation(int ring) const;
  // Azimuth of the center of 'column' in the sensor frame.
  double ColumnAzimuth(int column) const;
};

enum class BeamLabel : std::uint8_t {
  kNone,
  kWall,
  kDoor,
  kClutter,
  kFloor,
  kCeiling,
  kReflection,
};

std::string_view ToString(BeamLabel label);

struct SimulatedScan {
  scan::OrganizedScan scan;
  std::vector<BeamLabel> labels;  // rings x columns, row major.

  BeamLabel label(int ring, int column) const {
    return labels[static_cast<size_t>(ring) * scan.columns() + column];
  }
};

// Casts every beam of 'model' from 'pose' into the extruded scene. Noise and
// reflections are drawn from a generator seeded with 'seed'.
SimulatedScan SimulateScan(const SimScene& scene, const Pose2D& pose,
                           const SensorModel& model, std::uint64_t seed,
                           double timestamp = 0.);

// Seed for frame 'index' of a run seeded with 'base'.
std::uint64_t FrameSeed(std::uint64_t base, std::uint64_t index);

// True position plus an offset drawn uniformly from the disc of radius
// 'max_error'.
Vec2 WifiPrior(const Pose2D& truth, double max_error, std::uint64_t seed);

}  // namespace sim
}  // namespace areagraph

#endif  // AREAGRAPH_SIM_SIMULATOR_H_
