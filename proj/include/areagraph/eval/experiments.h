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

#ifndef AREAGRAPH_EVAL_EXPERIMENTS_H_
#define AREAGRAPH_EVAL_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "areagraph/eval/metrics.h"
#include "areagraph/global/global_localizer.h"
#include "areagraph/sim/scene_config.h"
#include "areagraph/sim/simulator.h"
#include "areagraph/tracking/pose_tracker.h"

namespace areagraph {
namespace eval {

struct RuntimeStats {
  double median_ms = 0.;
  double mean_ms = 0.;
  double max_ms = 0.;
};

RuntimeStats SummarizeRuntime(const std::vector<double>& runtimes_ms);

struct TrackingOptions {
  tracking::TrackerParams tracker;
  // Every perturb_every frames (0: never) the tracker is reseeded with its
  // own pose pushed perturb_offset meters along the heading.
  int perturb_every = 0;
  double perturb_offset = 0.;
};

struct TrackingReport {
  std::vector<tracking::TrackedFrame> frames;
  std::vector<TrajectoryRow> truth;
  std::vector<TrajectoryRow> estimate;
  AteReport ate;
  RuntimeStats runtime;  // Scan pipeline + ICP only.
  int diverged_frames = 0;
  // With relocalization off, the first diverged frame ends the run.
  int stopped_frame = -1;
  bool diverged() const { return diverged_frames > 0; }
};

// Simulates every frame of the scene trajectory (frame i with
// FrameSeed(scan_seed, i)) and tracks it from the true first pose. A
// divergence without relocalization is recorded, not thrown.
TrackingReport RunTracking(const sim::SceneInstance& instance,
                           const sim::SensorModel& sensor,
                           std::uint64_t scan_seed,
                           const TrackingOptions& options);

// One ablation setting.
struct Variant {
  bool use_weight = true;
  bool use_corridorness = true;
  geometry::PassageMode passages = geometry::PassageMode::kAdaptive;
  std::string Name() const;  // e.g. "weight=on corridorness=off passages=closed"
};

// Cartesian product, weight outermost.
std::vector<Variant> VariantProduct(const std::vector<bool>& weights,
                                    const std::vector<bool>& corridorness,
                                    const std::vector<geometry::PassageMode>& passages);

struct VariantRow {
  Variant variant;
  TrackingReport report;
};

// Header plus one line per row.
std::string FormatVariantTable(const std::vector<VariantRow>& rows);

// Global localization over random poses in several scenes.
struct GlobalScene {
  std::string name;
  osmag::OsmDocument map;
  double clutter_density = 0.1;
};

// Cluttered room, corridor with side rooms, office; all at the given density.
std::vector<GlobalScene> DefaultGlobalScenes(double clutter_density = 0.1);

struct GlobalSuiteParams {
  int frames_per_scene = 40;
  std::uint64_t seed = 1;
  double prior_error = 0.25;
  // True poses keep this clearance from area boundaries and from furniture.
  double pose_clearance = 0.6;
  double success_translation = 0.5;      // m
  double success_rotation = 10. * M_PI / 180.;
  sim::SensorModel sensor;
  global::GlobalParams global;
};

struct GlobalTrial {
  std::string scene;
  int index = 0;
  Pose2D truth;
  Vec2 prior = Vec2::Zero();
  std::array<global::ScoredGuess, 4> best;  // Indexed like kAllScoreFunctions.
  double runtime_ms = 0.;
};

struct SuccessRates {
  double translation = 0.;  // Fraction within success_translation.
  double rotation = 0.;     // Fraction within success_rotation.
};

struct GlobalSuiteResult {
  std::vector<GlobalTrial> trials;
  std::array<SuccessRates, 4> rates;
  RuntimeStats runtime;  // Per frame, all four score functions together.
};

// 'progress' (optional) is called after every trial.
GlobalSuiteResult RunGlobalSuite(
    const std::vector<GlobalScene>& scenes, const GlobalSuiteParams& params,
    const std::function<void(const GlobalTrial&)>& progress = nullptr);

std::string FormatGlobalSuite(const GlobalSuiteResult& result);

}  // namespace eval
}  // namespace areagraph

#endif  // AREAGRAPH_EVAL_EXPERIMENTS_H_
