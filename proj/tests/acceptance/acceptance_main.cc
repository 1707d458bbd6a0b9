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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Arguments: unit test executables to run for the
// property criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "areagraph/common/error.h"
#include "areagraph/eval/experiments.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/geometry/weight.h"
#include "areagraph/scan/organized_scan.h"
#include "areagraph/sim/scene.h"
#include "areagraph/sim/scene_config.h"
#include "areagraph/sim/scenes.h"
#include "areagraph/sim/simulator.h"
#include "areagraph/tracking/corridorness.h"
#include "fmt/format.h"
#include "fmt/ranges.h"

namespace areagraph {
namespace {

constexpr double kExact = 1e-12;
constexpr double kClosure = 1e-6;             // m
constexpr double kClosureFrameMs = 1000.;
constexpr int kGlobalMinFrames = 100;
constexpr double kGlobalTranslationRate = 0.85;
constexpr double kGlobalRotationRate = 0.95;
constexpr double kGlobalFrameBudgetMs = 5. * 60. * 1000.;
constexpr double kScoreMargin = 0.15;
constexpr double kLoopRmse = 0.2;             // m
constexpr double kLoopMax = 0.6;              // m
constexpr double kLoopMedianMs = 50.;
constexpr double kCorridorGain = 0.10;
constexpr double kHighClutter = 0.3;          // objects / m^2

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

sim::SceneConfig OfficeLoop() {
  return sim::LoadSceneConfig(std::string(AREAGRAPH_DATA_DIR) +
                              "/scenes/office_loop.ini");
}

eval::TrackingReport Track(const sim::SceneConfig& config,
                           const eval::TrackingOptions& options) {
  const sim::SceneInstance instance = sim::InstantiateScene(config);
  return eval::RunTracking(instance, config.sensor, config.seed, options);
}

bool Near(double expected, double actual) {
  return std::abs(expected - actual) <= kExact;
}

Outcome WeightValues() {
  struct Case {
    double sd;
    double w;
  };
  const Case cases[] = {{0., 1.}, {-0.5, 4. / 7.}, {1., 0.25}, {-1., 0.}, {3., 0.}};
  Outcome out{true, ""};
  for (const Case& c : cases) {
    const double w = geometry::Weight(c.sd);
    out.pass = out.pass && Near(c.w, w);
    out.detail += fmt::format("W({})={:.15g} ", c.sd, w);
  }
  return out;
}

std::vector<geometry::IntersectionResult> Orientations(int horizontal, int vertical) {
  std::vector<geometry::IntersectionResult> hits(horizontal + vertical);
  for (int i = horizontal; i < horizontal + vertical; ++i) {
    hits[i].segment_orientation = M_PI / 2.;
  }
  return hits;
}

Outcome CorridornessValues() {
  const auto half = tracking::ComputeCorridorness(Orientations(40, 40));
  const auto wall = tracking::ComputeCorridorness(Orientations(60, 0));
  // The same from a real scan: the center of an empty square room.
  const osmag::AreaGraph map = osmag::LoadFloor(sim::SquareRoomMap(), 0);
  const geometry::RayCaster caster(map);
  sim::SimScene scene;
  scene.map = &map;
  sim::SensorModel sensor;
  sensor.range_noise_sigma = 0.;
  sensor.reflection_prob = 0.;
  const Pose2D center(5., 5., 0.);
  const auto points =
      scan::ExtractClutterFree(sim::SimulateScan(scene, center, sensor, 1).scan);
  const auto room = tracking::ComputeCorridorness(
      caster.BatchIntersect(*map.LocateArea(center.translation()), center, points).hits);
  const double r_half = tracking::DownsampleRate(0.5);
  const double r_one = tracking::DownsampleRate(1.);
  const bool pass = half && wall && room && Near(0.5, half->value) &&
                    Near(1., wall->value) && Near(0.5, room->value) &&
                    Near(1., r_half) && Near(6., r_one);
  return {pass, fmt::format("Cor(split)={:.15g} Cor(wall)={:.15g} Cor(square room)={:.15g} "
                            "R(0.5)={:.15g} R(1)={:.15g}",
                            half ? half->value : NAN, wall ? wall->value : NAN,
                            room ? room->value : NAN, r_half, r_one)};
}

Outcome Closure() {
  struct Frame {
    std::string name;
    osmag::OsmDocument doc;
    Pose2D pose;
    bool close_doors;
  };
  const std::vector<Frame> frames = {
      {"square", sim::SquareRoomMap(), Pose2D(3., 4., 0.7), false},
      {"two_rooms/open", sim::TwoRoomMap(), Pose2D(5., 5., 0.2), false},
      {"two_rooms/open", sim::TwoRoomMap(), Pose2D(12.5, 3., 2.5), false},
      {"two_rooms/closed", sim::TwoRoomMap(), Pose2D(5., 5., 0.), true},
      {"room", sim::ClutteredRoomMap(), Pose2D(2., 2., 1.1), false},
  };
  sim::SensorModel sensor;
  sensor.range_noise_sigma = 0.;
  sensor.reflection_prob = 0.;
  double worst = 0.;
  double slowest_ms = 0.;
  int checked = 0;
  int doors = 0;
  for (const Frame& frame : frames) {
    const osmag::AreaGraph map = osmag::LoadFloor(frame.doc, 0);
    const geometry::RayCaster caster(map);
    sim::SimScene scene;
    scene.map = &map;
    if (frame.close_doors) {
      for (const auto& passage : map.passages()) {
        scene.door_states[passage.id] = sim::DoorState::kClosed;
      }
    }
    const auto start = Clock::now();
    const sim::SimulatedScan out = sim::SimulateScan(scene, frame.pose, sensor, 7);
    const auto points = scan::ExtractClutterFree(out.scan);
    const auto area = map.LocateArea(frame.pose.translation());
    if (!area) return {false, frame.name + ": pose off the map"};
    const auto batch = caster.BatchIntersect(*area, frame.pose, points);
    slowest_ms = std::max(slowest_ms, MsSince(start));
    for (size_t k = 0; k < batch.hits.size(); ++k) {
      const int index = batch.point_index[k];
      const int column = points.column_of[index];
      sim::BeamLabel label = sim::BeamLabel::kNone;
      for (int r = 0; r < out.scan.rings(); ++r) {
        const Vec3& p = out.scan.point(r, column);
        if (out.scan.valid(r, column) && p.x() == points.points[index].x() &&
            p.y() == points.points[index].y()) {
          label = out.label(r, column);
          break;
        }
      }
      if (label != sim::BeamLabel::kWall && label != sim::BeamLabel::kDoor) continue;
      ++checked;
      doors += label == sim::BeamLabel::kDoor;
      worst = std::max(worst, std::abs(batch.hits[k].sd));
    }
  }
  return {worst < kClosure && slowest_ms < kClosureFrameMs && checked > 0 && doors > 0,
          fmt::format("{} frames, {} wall/door points ({} door), max |sd| {:.3g} m, "
                      "slowest frame {:.0f} ms",
                      frames.size(), checked, doors, worst, slowest_ms)};
}

struct GlobalOutcomes {
  Outcome accuracy;
  Outcome ordering;
};

GlobalOutcomes GlobalSuite() {
  eval::GlobalSuiteParams params;  // 0.25 m prior, 6 m radius, 0.5 m, 2 deg.
  params.frames_per_scene = 40;
  const auto scenes = eval::DefaultGlobalScenes(0.1);
  int done = 0;
  const auto result = eval::RunGlobalSuite(scenes, params, [&](const eval::GlobalTrial& t) {
    if (++done % 10 == 0) {
      std::cerr << fmt::format("  global suite {} frames ({} {:.1f} s)\n", done, t.scene,
                               t.runtime_ms / 1000.);
    }
  });
  const int frames = static_cast<int>(result.trials.size());
  const auto& s1 = result.rates[0];
  const auto& s3 = result.rates[2];
  const auto& s4 = result.rates[3];
  GlobalOutcomes out;
  out.accuracy.pass = frames >= kGlobalMinFrames && scenes.size() >= 3 &&
                      s1.translation >= kGlobalTranslationRate &&
                      s1.rotation >= kGlobalRotationRate &&
                      result.runtime.max_ms <= kGlobalFrameBudgetMs;
  out.accuracy.detail = fmt::format(
      "{} frames over {} scenes, S1 within 0.5 m {:.3f}, within 10 deg {:.3f}, "
      "runtime median {:.1f} s max {:.1f} s",
      frames, scenes.size(), s1.translation, s1.rotation,
      result.runtime.median_ms / 1000., result.runtime.max_ms / 1000.);
  out.ordering.pass = s1.translation - s4.translation >= kScoreMargin &&
                      s3.translation - s4.translation >= kScoreMargin;
  out.ordering.detail = fmt::format(
      "within 0.5 m: S1 {:.3f} S2 {:.3f} S3 {:.3f} S4 {:.3f}; "
      "within 10 deg: S1 {:.3f} S2 {:.3f} S3 {:.3f} S4 {:.3f}",
      s1.translation, result.rates[1].translation, s3.translation, s4.translation,
      s1.rotation, result.rates[1].rotation, s3.rotation, s4.rotation);
  return out;
}

Outcome LoopAccuracy() {
  const sim::SceneConfig config = OfficeLoop();
  const auto report = Track(config, {});
  const bool pass = report.frames.size() == 300 && config.clutter.density > 0. &&
                    !report.diverged() && report.ate.ate_rmse <= kLoopRmse &&
                    report.ate.ate_max <= kLoopMax &&
                    report.runtime.median_ms <= kLoopMedianMs;
  return {pass, fmt::format("{} frames, clutter {}/m2, RMSE {:.4f} m, max {:.4f} m, "
                            "diverged {}, runtime median {:.2f} ms",
                            report.frames.size(), config.clutter.density,
                            report.ate.ate_rmse, report.ate.ate_max,
                            report.diverged_frames, report.runtime.median_ms)};
}

Outcome CorridorAblation() {
  sim::SceneConfig config;
  config.builtin = "plain_corridor";
  config.seed = 2;
  config.clutter.density = 0.1;
  config.clutter.path_clearance = 0.6;
  config.waypoints = {{0.05, 1.25}, {29.95, 1.25}};
  eval::TrackingOptions options;
  options.perturb_every = 10;
  options.perturb_offset = 0.4;
  const auto with = Track(config, options);
  options.tracker.icp.use_corridorness = false;
  const auto without = Track(config, options);
  const double gain = 1. - with.ate.ate_rmse / without.ate.ate_rmse;
  return {!with.diverged() && gain >= kCorridorGain,
          fmt::format("30 m corridor, 0.4 m push every 10 frames: RMSE {:.4f} m with "
                      "downsampling, {:.4f} m without ({:.0f}% better)",
                      with.ate.ate_rmse, without.ate.ate_rmse, 100. * gain)};
}

Outcome WeightAblation() {
  sim::SceneConfig config = OfficeLoop();
  config.clutter.density = kHighClutter;
  eval::TrackingOptions options;
  options.tracker.relocalize = false;
  const auto weighted = Track(config, options);
  options.tracker.icp.use_weight = false;
  const auto unweighted = Track(config, options);
  const bool pass = !weighted.diverged() &&
                    (unweighted.diverged() ||
                     unweighted.ate.ate_rmse > weighted.ate.ate_rmse);
  return {pass, fmt::format("office loop at {}/m2: weighted RMSE {:.4f} m (diverged {}), "
                            "unweighted RMSE {:.4f} m (diverged {}, stopped at {})",
                            kHighClutter, weighted.ate.ate_rmse, weighted.diverged_frames,
                            unweighted.ate.ate_rmse, unweighted.diverged_frames,
                            unweighted.stopped_frame)};
}

Outcome PassageAblation() {
  sim::SceneConfig walk;
  walk.builtin = "two_rooms";
  walk.seed = 3;
  walk.clutter.density = 0.1;
  walk.clutter.path_clearance = 0.6;
  walk.waypoints = {{5., 5.}, {13., 5.}};
  bool pass = true;
  std::string detail;
  for (const auto& [name, config] :
       {std::pair{"office loop", OfficeLoop()}, std::pair{"two-room walk", walk}}) {
    eval::TrackingOptions options;
    options.tracker.relocalize = false;
    const auto adaptive = Track(config, options);
    options.tracker.icp.passage_mode = geometry::PassageMode::kAllClosed;
    const auto closed = Track(config, options);
    pass = pass && !adaptive.diverged() &&
           adaptive.frames.size() == adaptive.truth.size() && closed.diverged();
    detail += fmt::format(
        "{}: adaptive diverged {}/{} RMSE {:.4f} m, closed stopped at frame {}; ", name,
        adaptive.diverged_frames, adaptive.frames.size(), adaptive.ate.ate_rmse,
        closed.stopped_frame);
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

// Standard output of a shell command; *status is -1 if it could not start.
std::string Capture(const std::string& command, int* status) {
  std::string text;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return text;
  }
  char buffer[4096];
  while (const size_t n = fread(buffer, 1, sizeof buffer, pipe)) text.append(buffer, n);
  *status = pclose(pipe);
  return text;
}

// Suite.Test names from --gtest_list_tests, parameter suffixes dropped.
std::set<std::string> ListTests(const std::string& binary) {
  int status = 0;
  const std::string listing = Capture("'" + binary + "' --gtest_list_tests", &status);
  std::set<std::string> names;
  std::string suite;
  size_t begin = 0;
  while (begin < listing.size()) {
    size_t end = listing.find('\n', begin);
    if (end == std::string::npos) end = listing.size();
    std::string line = listing.substr(begin, end - begin);
    begin = end + 1;
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (line.empty()) continue;
    if (line[0] != ' ') {
      suite = line.substr(0, line.size() - 1);
      if (const size_t slash = suite.find('/'); slash != std::string::npos) {
        suite = suite.substr(slash + 1);
      }
      continue;
    }
    std::string test = line.substr(line.find_first_not_of(' '));
    if (const size_t slash = test.find('/'); slash != std::string::npos) test.resize(slash);
    names.insert(suite + "." + test);
  }
  return names;
}

Outcome PropertySuites(const std::vector<std::string>& binaries) {
  // Randomized properties with at least 1000 cases each.
  const std::vector<std::string> required = {
      "IcpPropertyTest.MonotoneResidualAndProperRotation",
      "AreaGraphTest.LocateAreaIsAPartition",
      "DeterminismTest.SimulatedScansRepeatForEverySeed",
      "DeterminismTest.ClutterRepeatsForEverySeed",
      "DeterminismTest.IcpRepeatsForEveryStart",
      "GlobalLocalizerTest.RankingIgnoresEvaluationOrder",
  };
  if (binaries.empty()) return {false, "no test executables given"};
  std::set<std::string> listed;
  int tests = 0;
  std::vector<std::string> failed;
  for (const std::string& binary : binaries) {
    const auto names = ListTests(binary);
    listed.insert(names.begin(), names.end());
    tests += static_cast<int>(names.size());
    int status = 0;
    Capture("'" + binary + "' --gtest_brief=1 2>&1", &status);
    if (status != 0) failed.push_back(binary.substr(binary.find_last_of('/') + 1));
  }
  std::vector<std::string> missing;
  for (const std::string& name : required) {
    if (!listed.contains(name)) missing.push_back(name);
  }
  return {failed.empty() && missing.empty(),
          fmt::format("{} executables, {} tests, failing executables [{}], "
                      "missing properties [{}]",
                      binaries.size(), tests, fmt::join(failed, " "),
                      fmt::join(missing, " "))};
}

}  // namespace
}  // namespace areagraph

int main(int argc, char** argv) {
  using areagraph::Outcome;
  // --only=4,5 runs a subset.
  std::vector<std::string> binaries;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.starts_with("--only=")) {
      std::stringstream list(arg.substr(7));
      std::string item;
      while (std::getline(list, item, ',')) only.insert(std::stoi(item));
    } else {
      binaries.push_back(arg);
    }
  }
  int failures = 0;
  int ran = 0;
  const auto report = [&](int number, const std::string& title,
                          const std::function<Outcome()>& check) {
    if (!only.empty() && !only.contains(number)) return;
    ++ran;
    const auto start = areagraph::Clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << fmt::format("{} criterion {}: {} ({}; {:.1f} s)\n",
                             outcome.pass ? "PASS" : "FAIL", number, title,
                             outcome.detail, areagraph::MsSince(start) / 1000.)
              << std::flush;
  };

  report(1, "weight function values", areagraph::WeightValues);
  report(2, "corridorness and downsample rate values", areagraph::CorridornessValues);
  report(3, "geometric closure", areagraph::Closure);
  areagraph::GlobalOutcomes global;
  report(4, "global localization accuracy", [&] {
    global = areagraph::GlobalSuite();
    return global.accuracy;
  });
  report(5, "score function ordering", [&] {
    if (only.contains(5) && !only.contains(4)) global = areagraph::GlobalSuite();
    return global.ordering;
  });
  report(6, "tracking accuracy on the office loop", areagraph::LoopAccuracy);
  report(7, "corridor downsampling ablation", areagraph::CorridorAblation);
  report(8, "weight ablation under heavy clutter", areagraph::WeightAblation);
  report(9, "passage mode ablation", areagraph::PassageAblation);
  report(10, "property suites", [&] { return areagraph::PropertySuites(binaries); });
  std::cout << fmt::format("{} of {} criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
