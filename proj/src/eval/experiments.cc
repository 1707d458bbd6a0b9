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

#include "areagraph/eval/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "areagraph/common/error.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/sim/scene.h"
#include "areagraph/sim/scenes.h"
#include "boost/random/mersenne_twister.hpp"
#include "boost/random/uniform_real_distribution.hpp"
#include "fmt/format.h"

namespace areagraph {
namespace eval {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Uniform pose at least 'clearance' from the boundary of its area.
Pose2D SamplePose(const osmag::AreaGraph& map, double clearance,
                  boost::random::mt19937_64& rng) {
  Vec2 lo = map.areas().front().polygon.front();
  Vec2 hi = lo;
  for (const osmag::Area& area : map.areas()) {
    for (const Vec2& v : area.polygon) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
  }
  boost::random::uniform_real_distribution<double> ux(lo.x(), hi.x());
  boost::random::uniform_real_distribution<double> uy(lo.y(), hi.y());
  boost::random::uniform_real_distribution<double> utheta(0., 2. * M_PI);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Vec2 p(ux(rng), uy(rng));
    const auto id = map.LocateArea(p);
    if (!id) continue;
    if (DistanceToBoundary(p, map.FindArea(*id)->polygon) < clearance) continue;
    return Pose2D(p.x(), p.y(), utheta(rng));
  }
  throw Error(ErrorCode::kPlacement, "no pose with the requested clearance");
}

}  // namespace

RuntimeStats SummarizeRuntime(const std::vector<double>& runtimes_ms) {
  RuntimeStats stats;
  if (runtimes_ms.empty()) return stats;
  stats.median_ms = Median(runtimes_ms);
  stats.mean_ms = std::accumulate(runtimes_ms.begin(), runtimes_ms.end(), 0.) /
                  static_cast<double>(runtimes_ms.size());
  stats.max_ms = *std::max_element(runtimes_ms.begin(), runtimes_ms.end());
  return stats;
}

TrackingReport RunTracking(const sim::SceneInstance& instance,
                           const sim::SensorModel& sensor,
                           std::uint64_t scan_seed,
                           const TrackingOptions& options) {
  if (instance.trajectory.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "scene has no trajectory");
  }
  const geometry::RayCaster caster(*instance.map);
  tracking::PoseTracker tracker(caster, instance.trajectory.front().pose,
                                options.tracker);
  TrackingReport report;
  report.truth = instance.trajectory;
  std::vector<double> runtimes;
  for (size_t i = 0; i < instance.trajectory.size(); ++i) {
    const TrajectoryRow& truth = instance.trajectory[i];
    if (options.perturb_every > 0 && i > 0 &&
        i % static_cast<size_t>(options.perturb_every) == 0) {
      const Pose2D& pose = tracker.state().pose;
      const Pose2D pushed(pose.x + options.perturb_offset * std::cos(pose.theta),
                          pose.y + options.perturb_offset * std::sin(pose.theta),
                          pose.theta);
      if (instance.map->LocateArea(pushed.translation())) tracker.Reseed(pushed);
    }
    const sim::SimulatedScan simulated =
        sim::SimulateScan(instance.scene, truth.pose, sensor,
                          sim::FrameSeed(scan_seed, i), truth.timestamp);
    tracking::TrackedFrame frame;
    try {
      frame = tracker.ProcessScan(simulated.scan);
    } catch (const DivergenceError&) {
      // Relocalization is off: the run ends here.
      frame.timestamp = truth.timestamp;
      frame.pose = tracker.state().pose;
      frame.diverged = true;
      ++report.diverged_frames;
      report.frames.push_back(frame);
      report.stopped_frame = static_cast<int>(i);
      break;
    }
    runtimes.push_back(frame.runtime_ms);
    if (frame.diverged) ++report.diverged_frames;
    report.frames.push_back(frame);
  }
  report.estimate = tracking::ToTrajectory(report.frames);
  try {
    report.ate = ComputeAte(report.estimate, report.truth);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientData) throw;
    report.ate.ate_rmse = report.ate.ate_max = std::nan("");
  }
  report.runtime = SummarizeRuntime(runtimes);
  return report;
}

std::string Variant::Name() const {
  return fmt::format("weight={} corridorness={} passages={}",
                     use_weight ? "on" : "off", use_corridorness ? "on" : "off",
                     geometry::ToString(passages));
}

std::vector<Variant> VariantProduct(
    const std::vector<bool>& weights, const std::vector<bool>& corridorness,
    const std::vector<geometry::PassageMode>& passages) {
  std::vector<Variant> variants;
  for (const bool weight : weights) {
    for (const bool corridor : corridorness) {
      for (const geometry::PassageMode mode : passages) {
        variants.push_back({weight, corridor, mode});
      }
    }
  }
  return variants;
}

std::string FormatVariantTable(const std::vector<VariantRow>& rows) {
  std::string out =
      "# weight corridorness passages ate_rmse ate_max diverged_frames "
      "median_ms frames\n";
  for (const VariantRow& row : rows) {
    const TrackingReport& r = row.report;
    out += fmt::format("{} {} {} {:.4f} {:.4f} {} {:.2f} {}\n",
                       row.variant.use_weight ? "on" : "off",
                       row.variant.use_corridorness ? "on" : "off",
                       geometry::ToString(row.variant.passages), r.ate.ate_rmse,
                       r.ate.ate_max, r.diverged_frames, r.runtime.median_ms,
                       r.frames.size());
  }
  return out;
}

std::vector<GlobalScene> DefaultGlobalScenes(double clutter_density) {
  return {{"room", sim::ClutteredRoomMap(), clutter_density},
          {"corridor", sim::CorridorMap(), clutter_density},
          {"office", sim::OfficeMap(), clutter_density}};
}

GlobalSuiteResult RunGlobalSuite(
    const std::vector<GlobalScene>& scenes, const GlobalSuiteParams& params,
    const std::function<void(const GlobalTrial&)>& progress) {
  GlobalSuiteResult result;
  std::array<int, 4> translation_ok{};
  std::array<int, 4> rotation_ok{};
  std::vector<double> runtimes;
  std::uint64_t trial_counter = 0;
  for (const GlobalScene& scene : scenes) {
    const osmag::AreaGraph map = osmag::LoadFloor(scene.map, 0);
    const geometry::RayCaster caster(map);
    for (int i = 0; i < params.frames_per_scene; ++i) {
      const std::uint64_t seed = sim::FrameSeed(params.seed, trial_counter++);
      boost::random::mt19937_64 rng(seed);
      GlobalTrial trial;
      trial.scene = scene.name;
      trial.index = i;
      trial.truth = SamplePose(map, params.pose_clearance, rng);

      sim::ClutterParams clutter;
      clutter.density = scene.clutter_density;
      clutter.path_clearance = params.pose_clearance;
      clutter.keep_out.push_back({trial.truth.translation()});
      sim::SimScene sim_scene;
      sim_scene.map = &map;
      sim_scene.seed = seed;
      sim_scene.clutter = sim::GenerateClutter(map, clutter, sim::FrameSeed(seed, 0));
      const sim::SimulatedScan simulated = sim::SimulateScan(
          sim_scene, trial.truth, params.sensor, sim::FrameSeed(seed, 1));
      trial.prior = sim::WifiPrior(trial.truth, params.prior_error,
                                   sim::FrameSeed(seed, 2));

      const auto start = Clock::now();
      const scan::ClutterFreePointSet points =
          scan::ExtractClutterFree(simulated.scan);
      const std::array<global::GlobalResult, 4> found =
          global::GlobalLocalizeAll(caster, trial.prior, points, params.global);
      trial.runtime_ms = ElapsedMs(start);
      runtimes.push_back(trial.runtime_ms);

      for (size_t k = 0; k < found.size(); ++k) {
        trial.best[k] = found[k].best;
        const double dt = (found[k].best.pose.translation() -
                           trial.truth.translation()).norm();
        const double dr = std::abs(AngleDifference(found[k].best.pose.theta,
                                                   trial.truth.theta));
        if (dt <= params.success_translation) ++translation_ok[k];
        if (dr <= params.success_rotation) ++rotation_ok[k];
      }
      if (progress) progress(trial);
      result.trials.push_back(std::move(trial));
    }
  }
  const double n = std::max<double>(1., static_cast<double>(result.trials.size()));
  for (size_t k = 0; k < 4; ++k) {
    result.rates[k] = {translation_ok[k] / n, rotation_ok[k] / n};
  }
  result.runtime = SummarizeRuntime(runtimes);
  return result;
}

std::string FormatGlobalSuite(const GlobalSuiteResult& result) {
  std::string out = "# score_fn within_0.5m within_10deg frames\n";
  for (size_t k = 0; k < 4; ++k) {
    out += fmt::format("{} {:.4f} {:.4f} {}\n",
                       global::ToString(global::kAllScoreFunctions[k]),
                       result.rates[k].translation, result.rates[k].rotation,
                       result.trials.size());
  }
  out += fmt::format("# runtime_ms median={:.1f} mean={:.1f} max={:.1f}\n",
                     result.runtime.median_ms, result.runtime.mean_ms,
                     result.runtime.max_ms);
  return out;
}

}  // namespace eval
}  // namespace areagraph
