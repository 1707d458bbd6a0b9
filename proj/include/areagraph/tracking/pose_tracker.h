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

#ifndef AREAGRAPH_TRACKING_POSE_TRACKER_H_
#define AREAGRAPH_TRACKING_POSE_TRACKER_H_

#include <span>
#include <vector>

#include "areagraph/common/pose2d.h"
#include "areagraph/common/trajectory.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/global/global_localizer.h"
#include "areagraph/scan/organized_scan.h"
#include "areagraph/tracking/icp.h"

namespace areagraph {
namespace tracking {

struct TrackerParams {
  IcpParams icp;
  double z_low = scan::kDefaultZLow;
  double z_high = scan::kDefaultZHigh;
  // Run global localization around the last good pose after a divergence.
  bool relocalize = true;
  // Frames to wait after a relocalization before trying another one.
  int relocalization_cooldown = 10;
  global::GlobalParams relocalization;
};

struct TrackerState {
  Pose2D pose;
  osmag::AreaId area = 0;
  int frame_index = -1;  // Last processed frame.
  bool converged = false;
  double last_residual = 0.;
};

struct TrackedFrame {
  double timestamp = 0.;
  Pose2D pose;
  bool converged = false;   // ICP met its eps criteria on this frame.
  bool diverged = false;    // ICP diverged; pose comes from relocalization.
  int iterations = 0;
  double residual = 0.;
  double support = 0.;
  double corridorness = 0.;
  double runtime_ms = 0.;
};

// Frame-to-map tracking seeded by the previous estimate. Takes scans only.
class PoseTracker {
 public:
  PoseTracker(const geometry::RayCaster& caster, const Pose2D& initial,
              const TrackerParams& params);

  // Height filter, clutter-free subsample, then ICP.
  TrackedFrame ProcessScan(const scan::OrganizedScan& scan);
  TrackedFrame ProcessPoints(const scan::ClutterFreePointSet& points,
                             double timestamp);

  const TrackerState& state() const { return state_; }
  // Overrides the pose the next frame starts from.
  void Reseed(const Pose2D& pose);

 private:
  // Global localization around the last pose, then ICP from its best guess.
  void Relocalize(const scan::ClutterFreePointSet& points, TrackedFrame* frame);

  const geometry::RayCaster& caster_;
  TrackerParams params_;
  TrackerState state_;
  int last_relocalization_ = -1;  // Frame index, -1 before any.
};

std::vector<TrackedFrame> TrackSequence(const geometry::RayCaster& caster,
                                        const Pose2D& initial,
                                        std::span<const scan::OrganizedScan> scans,
                                        const TrackerParams& params);

std::vector<TrajectoryRow> ToTrajectory(const std::vector<TrackedFrame>& frames);

}  // namespace tracking
}  // namespace areagraph

#endif  // AREAGRAPH_TRACKING_POSE_TRACKER_H_
