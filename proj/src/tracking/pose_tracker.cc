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

#include "areagraph/tracking/pose_tracker.h"

#include <chrono>

#include "areagraph/common/error.h"

namespace areagraph {
namespace tracking {

PoseTracker::PoseTracker(const geometry::RayCaster& caster,
                         const Pose2D& initial, const TrackerParams& params)
    : caster_(caster), params_(params) {
  state_.pose = initial;
  const auto area = caster.map().LocateArea(initial.translation());
  if (!area) {
    throw Error(ErrorCode::kPoseOutOfMap, "initial tracking pose is off the map");
  }
  state_.area = *area;
}

void PoseTracker::Reseed(const Pose2D& pose) {
  const auto area = caster_.map().LocateArea(pose.translation());
  if (!area) {
    throw Error(ErrorCode::kPoseOutOfMap, "reseed pose is off the map");
  }
  state_.pose = pose;
  state_.area = *area;
}

TrackedFrame PoseTracker::ProcessScan(const scan::OrganizedScan& scan) {
  return ProcessPoints(
      scan::ExtractClutterFree(scan, params_.z_low, params_.z_high),
      scan.timestamp());
}

TrackedFrame PoseTracker::ProcessPoints(const scan::ClutterFreePointSet& points,
                                        double timestamp) {
  const auto start = std::chrono::steady_clock::now();
  TrackedFrame frame;
  frame.timestamp = timestamp;
  try {
    const IcpResult icp = RegisterIcp(caster_, state_.pose, points, params_.icp);
    state_.pose = icp.pose;
    state_.area = icp.area;
    state_.converged = icp.converged;
    state_.last_residual = icp.residual;
    frame.converged = icp.converged;
    frame.iterations = icp.iterations;
    frame.residual = icp.residual;
    frame.support = icp.support;
    frame.corridorness = icp.corridorness;
  } catch (const DivergenceError&) {
    if (!params_.relocalize) throw;
    frame.diverged = true;
    state_.converged = false;
    const int index = state_.frame_index + 1;
    const bool cooling = last_relocalization_ >= 0 &&
                         index - last_relocalization_ <= params_.relocalization_cooldown;
    if (!cooling) Relocalize(points, &frame);
  }
  ++state_.frame_index;
  frame.pose = state_.pose;
  frame.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return frame;
}

void PoseTracker::Relocalize(const scan::ClutterFreePointSet& points,
                             TrackedFrame* frame) {
  last_relocalization_ = state_.frame_index + 1;
  global::GlobalParams global = params_.relocalization;
  global.cast = {params_.icp.passage_mode, params_.icp.passage_threshold};
  try {
    const global::GlobalResult found = global::GlobalLocalize(
        caster_, state_.pose.translation(), points, global);
    state_.pose = found.best.pose;
    state_.area = found.best.area;
    // Refine, but keep the frame flagged either way.
    const IcpResult icp = RegisterIcp(caster_, state_.pose, points, params_.icp);
    state_.pose = icp.pose;
    state_.area = icp.area;
    state_.last_residual = icp.residual;
    frame->iterations = icp.iterations;
    frame->residual = icp.residual;
    frame->support = icp.support;
    frame->corridorness = icp.corridorness;
  } catch (const Error&) {
    // Nothing better than the last good pose; try again later.
  }
}

std::vector<TrackedFrame> TrackSequence(const geometry::RayCaster& caster,
                                        const Pose2D& initial,
                                        std::span<const scan::OrganizedScan> scans,
                                        const TrackerParams& params) {
  PoseTracker tracker(caster, initial, params);
  std::vector<TrackedFrame> frames;
  frames.reserve(scans.size());
  for (const scan::OrganizedScan& scan : scans) {
    frames.push_back(tracker.ProcessScan(scan));
  }
  return frames;
}

std::vector<TrajectoryRow> ToTrajectory(const std::vector<TrackedFrame>& frames) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(frames.size());
  for (const TrackedFrame& frame : frames) {
    rows.push_back({frame.timestamp, frame.pose, !frame.diverged});
  }
  return rows;
}

}  // namespace tracking
}  // namespace areagraph
