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

#include "tools/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "areagraph/common/trajectory.h"
#include "areagraph/eval/experiments.h"
#include "areagraph/eval/metrics.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/global/global_localizer.h"
#include "areagraph/osmag/area_graph.h"
#include "areagraph/osmag/osm_document.h"
#include "areagraph/osmag/validation.h"
#include "areagraph/scan/scan_io.h"
#include "areagraph/sim/scene_config.h"
#include "areagraph/sim/scenes.h"
#include "areagraph/sim/simulator.h"
#include "areagraph/tracking/pose_tracker.h"
#include "fmt/format.h"
#include "fmt/ostream.h"
#include "tools/cli/run_config.h"
#include "tools/cli/svg.h"

namespace areagraph {
namespace cli {
namespace {

namespace fs = std::filesystem;

constexpr double kDegree = M_PI / 180.;

// Flags shared by the commands that take a RunConfig.
struct RunFlags {
  std::string config;
  std::optional<std::string> map;
  std::optional<int> level;
  std::optional<std::string> scan;
  std::optional<std::string> scan_dir;
  std::optional<std::string> scene;
  std::optional<std::string> truth;
  std::optional<int> frame;
  std::optional<std::string> prior;
  std::optional<std::string> initial;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> score_fn;
  std::optional<std::string> passages;
  std::optional<std::string> icp_solver;
  bool no_weight = false;
  bool no_corridorness = false;
  bool no_relocalize = false;
};

void AddRunFlags(CLI::App* app, RunFlags* f, bool ablation_flags) {
  app->add_option("--config", f->config, "Run config file (see 'template')");
  app->add_option("--map", f->map, "osmAG map file");
  app->add_option("--level", f->level, "Floor level to load");
  app->add_option("--scan", f->scan, "One scan file");
  app->add_option("--scan-dir", f->scan_dir, "Directory of scan files, read in name order");
  app->add_option("--scene", f->scene, "Simulator scene config");
  app->add_option("--truth", f->truth, "Ground truth trajectory");
  app->add_option("--frame", f->frame, "Frame index for global localization");
  app->add_option("--prior", f->prior, "Position prior x,y");
  app->add_option("--initial", f->initial, "Initial pose x,y,theta_rad");
  app->add_option("--out", f->out, "Output directory");
  app->add_option("--seed", f->seed, "Seed (defaults to the scene seed)");
  app->add_option("--score-fn", f->score_fn, "s1, s2, s3 or s4")
      ->check(CLI::IsMember({"s1", "s2", "s3", "s4"}));
  app->add_option("--icp-solver", f->icp_solver, "closed_form or point_to_line")
      ->check(CLI::IsMember({"closed_form", "point_to_line"}));
  app->add_flag("--no-relocalize", f->no_relocalize,
                "Fail on divergence instead of relocalizing");
  if (ablation_flags) {
    app->add_option("--passages", f->passages, "adaptive, open or closed")
        ->check(CLI::IsMember({"adaptive", "open", "closed"}));
    app->add_flag("--no-weight", f->no_weight, "Unweighted ICP");
    app->add_flag("--no-corridorness", f->no_corridorness, "No corridorness downsampling");
  }
}

RunConfig BuildConfig(const RunFlags& f) {
  RunConfig config = f.config.empty() ? RunConfig() : LoadRunConfig(f.config);
  if (f.map) config.map_path = *f.map;
  if (f.level) config.level = *f.level;
  // A source flag replaces every source from the config file.
  if (f.scan || f.scan_dir || f.scene) {
    config.scan_file = f.scan.value_or("");
    config.scan_dir = f.scan_dir.value_or("");
    config.scene_path = f.scene.value_or("");
  }
  if (f.truth) config.truth_path = *f.truth;
  if (f.frame) config.frame = *f.frame;
  if (f.prior) config.prior = ParsePoint(*f.prior);
  if (f.initial) config.initial_pose = ParsePose(*f.initial);
  if (f.out) config.output_dir = *f.out;
  if (f.seed) config.seed = *f.seed;
  if (f.score_fn) config.global.score_function = *global::ParseScoreFunction(*f.score_fn);
  if (f.passages) config.tracker.icp.passage_mode = *geometry::ParsePassageMode(*f.passages);
  if (f.icp_solver) config.tracker.icp.solver = *tracking::ParseIcpSolver(*f.icp_solver);
  if (f.no_weight) config.tracker.icp.use_weight = false;
  if (f.no_corridorness) config.tracker.icp.use_corridorness = false;
  if (f.no_relocalize) config.tracker.relocalize = false;
  // Relocalization searches the same grid as global localization.
  config.tracker.relocalization = config.global;
  config.tracker.relocalization.cast.passage_mode = config.tracker.icp.passage_mode;
  return config;
}

// The map and the frames of a run, from files or from a simulated scene.
struct Source {
  std::unique_ptr<osmag::AreaGraph> file_map;
  std::optional<sim::SceneInstance> scene;
  sim::SensorModel sensor;
  std::uint64_t seed = 1;
  std::vector<std::string> scan_files;
  std::vector<TrajectoryRow> truth;

  const osmag::AreaGraph& map() const { return scene ? *scene->map : *file_map; }
  size_t frames() const { return scene ? truth.size() : scan_files.size(); }

  scan::OrganizedScan Scan(size_t i) const {
    if (!scene) return scan::ReadScanFile(scan_files[i]);
    return sim::SimulateScan(scene->scene, truth[i].pose, sensor, sim::FrameSeed(seed, i),
                             truth[i].timestamp)
        .scan;
  }

  std::optional<Pose2D> TruthAt(double timestamp) const {
    const TrajectoryRow* nearest = nullptr;
    for (const TrajectoryRow& row : truth) {
      if (nearest == nullptr ||
          std::abs(row.timestamp - timestamp) < std::abs(nearest->timestamp - timestamp)) {
        nearest = &row;
      }
    }
    if (nearest == nullptr || std::abs(nearest->timestamp - timestamp) > 0.05) {
      return std::nullopt;
    }
    return nearest->pose;
  }
};

std::vector<std::string> ListScanFiles(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("no scan files in '{}'", dir));
  }
  return files;
}

Source LoadSource(const RunConfig& config) {
  config.Validate();
  Source source;
  if (!config.scene_path.empty()) {
    sim::SceneConfig scene = sim::LoadSceneConfig(config.scene_path);
    if (config.seed) scene.seed = *config.seed;
    source.scene = sim::InstantiateScene(scene);
    source.truth = source.scene->trajectory;
    source.sensor = scene.sensor;
    source.seed = scene.seed;
    if (source.truth.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "scene has no trajectory waypoints");
    }
    return source;
  }
  source.file_map = std::make_unique<osmag::AreaGraph>(
      osmag::LoadFloor(osmag::ReadOsmFile(config.map_path), config.level));
  source.seed = config.seed.value_or(1);
  source.scan_files = config.scan_file.empty() ? ListScanFiles(config.scan_dir)
                                               : std::vector<std::string>{config.scan_file};
  if (!config.truth_path.empty()) source.truth = ReadTrajectoryFile(config.truth_path);
  return source;
}

void EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, fmt::format("cannot create '{}': {}", dir, ec.message()));
  }
}

std::string FormatPose(const Pose2D& pose) {
  return fmt::format("{:.4f} {:.4f} {:.6f}", pose.x, pose.y, pose.theta);
}

double AngleError(double a, double b) { return std::abs(std::remainder(a - b, 2. * M_PI)); }

// Global localization of frame 'index'. The prior comes from the config, or
// is drawn around the true pose.
global::GlobalResult LocalizeFrame(const RunConfig& config, const Source& source,
                                   const geometry::RayCaster& caster, size_t index,
                                   const scan::OrganizedScan& scan, Vec2* prior_out) {
  const std::optional<Pose2D> truth = source.TruthAt(scan.timestamp());
  Vec2 prior;
  if (config.prior) {
    prior = *config.prior;
  } else if (truth && source.scene) {
    prior = sim::WifiPrior(*truth, config.prior_error,
                           sim::FrameSeed(sim::FrameSeed(source.seed, index), 2));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "no position prior given (--prior x,y)");
  }
  if (prior_out != nullptr) *prior_out = prior;
  const scan::ClutterFreePointSet points =
      scan::ExtractClutterFree(scan, config.tracker.z_low, config.tracker.z_high);
  return global::GlobalLocalize(caster, prior, points, config.global);
}

int CmdValidateMap(const std::string& path, std::ostream& out) {
  const osmag::OsmDocument doc = osmag::ReadOsmFile(path);
  const std::vector<osmag::Violation> violations = osmag::ValidateDocument(doc);
  for (const osmag::Violation& v : violations) {
    fmt::print(out, "violation {} {} {}\n", v.code, v.element_id, v.message);
  }
  if (!violations.empty()) {
    fmt::print(out, "invalid: {} violation(s)\n", violations.size());
    return kExitUsage;
  }
  for (const int level : osmag::LeafLevels(doc)) {
    const osmag::AreaGraph map = osmag::LoadFloor(doc, level);
    fmt::print(out, "level {}: {} areas, {} passages\n", level, map.areas().size(),
               map.passages().size());
  }
  fmt::print(out, "valid\n");
  return kExitOk;
}

int CmdSimulate(const std::string& scene_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed, std::ostream& out) {
  sim::SceneConfig config = sim::LoadSceneConfig(scene_path);
  if (seed) config.seed = *seed;
  const sim::SceneInstance instance = sim::InstantiateScene(config);
  if (instance.trajectory.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "scene has no trajectory waypoints");
  }
  const std::string scan_dir = (fs::path(out_dir) / "scans").string();
  EnsureDirectory(scan_dir);
  for (size_t i = 0; i < instance.trajectory.size(); ++i) {
    const TrajectoryRow& row = instance.trajectory[i];
    const sim::SimulatedScan simulated = sim::SimulateScan(
        instance.scene, row.pose, config.sensor, sim::FrameSeed(config.seed, i), row.timestamp);
    scan::WriteScanFile(simulated.scan,
                        (fs::path(scan_dir) / fmt::format("scan_{:06d}.txt", i)).string());
  }
  WriteTrajectoryFile(instance.trajectory, (fs::path(out_dir) / "ground_truth.txt").string());
  osmag::WriteOsmFile(sim::LoadSceneMap(config), (fs::path(out_dir) / "map.osm").string());
  fmt::print(out, "wrote {} scans, ground_truth.txt and map.osm to {}\n",
             instance.trajectory.size(), out_dir);
  return kExitOk;
}

int CmdGlobalLocalize(const RunConfig& config, std::ostream& out) {
  const Source source = LoadSource(config);
  if (config.frame < 0 || static_cast<size_t>(config.frame) >= source.frames()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("frame {} out of range [0, {})", config.frame, source.frames()));
  }
  const geometry::RayCaster caster(source.map());
  const scan::OrganizedScan scan = source.Scan(config.frame);
  const auto start = std::chrono::steady_clock::now();
  Vec2 prior;
  const global::GlobalResult result =
      LocalizeFrame(config, source, caster, config.frame, scan, &prior);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();

  std::string report =
      fmt::format("pose {} area {} score {:.6g} score_fn {}\n", FormatPose(result.best.pose),
                  result.best.area, result.best.score, global::ToString(result.score_function));
  report += fmt::format("prior {:.4f} {:.4f}\n", prior.x(), prior.y());
  if (const auto truth = source.TruthAt(scan.timestamp())) {
    report += fmt::format("truth {} translation_error {:.4f} rotation_error_deg {:.3f}\n",
                          FormatPose(*truth),
                          (truth->translation() - result.best.pose.translation()).norm(),
                          AngleError(truth->theta, result.best.pose.theta) / kDegree);
  }
  report += fmt::format("guesses {}\n# top {}\n", result.guess_count, result.top.size());
  report += global::FormatScoreReport(result.top);
  out << report;
  fmt::print(out, "# runtime_ms {:.1f}\n", ms);
  if (!config.output_dir.empty()) {
    EnsureDirectory(config.output_dir);
    WriteTextFile((fs::path(config.output_dir) / "global.txt").string(), report);
  }
  return kExitOk;
}

std::string FormatRuntime(const eval::RuntimeStats& r) {
  return fmt::format("runtime_ms median={:.2f} mean={:.2f} max={:.2f}", r.median_ms, r.mean_ms,
                     r.max_ms);
}

int CmdTrack(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.output_dir.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "track needs an output directory (--out)");
  }
  const Source source = LoadSource(config);
  eval::TrackingReport report;
  if (source.scene) {
    eval::TrackingOptions options;
    options.tracker = config.tracker;
    report = eval::RunTracking(*source.scene, source.sensor, source.seed, options);
  } else {
    const geometry::RayCaster caster(source.map());
    Pose2D initial;
    if (config.initial_pose) {
      initial = *config.initial_pose;
    } else {
      const global::GlobalResult located =
          LocalizeFrame(config, source, caster, 0, source.Scan(0), nullptr);
      initial = located.best.pose;
      fmt::print(err, "initial pose from global localization: {}\n", FormatPose(initial));
    }
    tracking::PoseTracker tracker(caster, initial, config.tracker);
    std::vector<double> runtimes;
    for (size_t i = 0; i < source.frames(); ++i) {
      const tracking::TrackedFrame frame = tracker.ProcessScan(source.Scan(i));
      runtimes.push_back(frame.runtime_ms);
      report.diverged_frames += frame.diverged;
      report.frames.push_back(frame);
    }
    report.estimate = tracking::ToTrajectory(report.frames);
    report.runtime = eval::SummarizeRuntime(runtimes);
    report.truth = source.truth;
    if (!report.truth.empty()) report.ate = eval::ComputeAte(report.estimate, report.truth);
  }

  EnsureDirectory(config.output_dir);
  WriteTrajectoryFile(report.estimate, (fs::path(config.output_dir) / "trajectory.txt").string());
  std::string summary = fmt::format("frames {} diverged_frames {}\n", report.frames.size(),
                                    report.diverged_frames);
  if (!report.truth.empty()) summary += eval::FormatAte(report.ate) + "\n";
  summary += FormatRuntime(report.runtime) + "\n";
  out << summary;
  WriteTextFile((fs::path(config.output_dir) / "report.txt").string(), summary);
  if (report.diverged()) {
    PrintErrorLine(err, ErrorCode::kDivergence,
                   fmt::format("tracking diverged on {} of {} frames", report.diverged_frames,
                               report.frames.size()));
    return kExitAlgorithm;
  }
  return kExitOk;
}

struct ExperimentFlags {
  std::string suite = "tracking";
  std::vector<std::string> weight = {"on", "off"};
  std::vector<std::string> corridorness = {"on", "off"};
  std::vector<std::string> passages = {"adaptive", "open", "closed"};
  int perturb_every = 0;
  double perturb_offset = 0.;
  int frames_per_scene = 40;
  double density = 0.1;
};

std::vector<bool> OnOff(const std::vector<std::string>& values) {
  std::vector<bool> out;
  for (const std::string& v : values) out.push_back(v == "on");
  return out;
}

int CmdExperiment(const RunConfig& config, const ExperimentFlags& flags, std::ostream& out,
                  std::ostream& err) {
  std::string table;
  if (flags.suite == "global") {
    eval::GlobalSuiteParams params;
    params.frames_per_scene = flags.frames_per_scene;
    params.seed = config.seed.value_or(1);
    params.prior_error = config.prior_error;
    params.global = config.global;
    const auto result = eval::RunGlobalSuite(
        eval::DefaultGlobalScenes(flags.density), params, [&](const eval::GlobalTrial& trial) {
          fmt::print(err, "{} #{} {:.0f} ms\n", trial.scene, trial.index, trial.runtime_ms);
        });
    table = eval::FormatGlobalSuite(result);
  } else {
    const Source source = LoadSource(config);
    if (!source.scene) {
      throw Error(ErrorCode::kInvalidArgument, "tracking experiments need a scene (--scene)");
    }
    std::vector<geometry::PassageMode> modes;
    for (const std::string& p : flags.passages) modes.push_back(*geometry::ParsePassageMode(p));
    std::vector<eval::VariantRow> rows;
    for (const eval::Variant& variant :
         eval::VariantProduct(OnOff(flags.weight), OnOff(flags.corridorness), modes)) {
      eval::TrackingOptions options;
      options.tracker = config.tracker;
      options.tracker.icp.use_weight = variant.use_weight;
      options.tracker.icp.use_corridorness = variant.use_corridorness;
      options.tracker.icp.passage_mode = variant.passages;
      options.tracker.relocalization.cast.passage_mode = variant.passages;
      options.perturb_every = flags.perturb_every;
      options.perturb_offset = flags.perturb_offset;
      fmt::print(err, "running {}\n", variant.Name());
      rows.push_back({variant, eval::RunTracking(*source.scene, source.sensor, source.seed,
                                                 options)});
    }
    table = eval::FormatVariantTable(rows);
  }
  out << table;
  if (!config.output_dir.empty()) {
    EnsureDirectory(config.output_dir);
    WriteTextFile((fs::path(config.output_dir) / "experiment.txt").string(), table);
  }
  return kExitOk;
}

int CmdEvaluate(const std::string& estimate_path, const std::string& truth_path, double max_dt,
                const std::string& errors_path, std::ostream& out) {
  const auto estimate = ReadTrajectoryFile(estimate_path);
  const auto truth = ReadTrajectoryFile(truth_path);
  const eval::AteReport report = eval::ComputeAte(estimate, truth, max_dt);
  fmt::print(out, "{}\nmatched {} unmatched {} flagged {} rotation_rmse_deg {:.3f}\n",
             eval::FormatAte(report), report.matched, report.unmatched, report.flagged,
             report.rotation_rmse / kDegree);
  if (!errors_path.empty()) {
    std::string text = "# timestamp error_m\n";
    const std::vector<double> errors = RowErrors(estimate, truth, max_dt);
    for (size_t i = 0; i < estimate.size(); ++i) {
      if (!std::isnan(errors[i])) {
        text += fmt::format("{:.6f} {:.6f}\n", estimate[i].timestamp, errors[i]);
      }
    }
    WriteTextFile(errors_path, text);
  }
  return kExitOk;
}

int CmdRender(const std::string& map_path, int level,
              const std::vector<std::string>& trajectory_paths, const std::string& truth_path,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  const osmag::AreaGraph map = osmag::LoadFloor(osmag::ReadOsmFile(map_path), level);
  std::vector<TrajectoryRow> truth;
  if (!truth_path.empty()) truth = ReadTrajectoryFile(truth_path);
  std::vector<SvgTrajectory> trajectories;
  for (const std::string& path : trajectory_paths) {
    SvgTrajectory trajectory{fs::path(path).filename().string(), ReadTrajectoryFile(path), {}};
    if (trajectory.rows.empty()) {
      fmt::print(err, "warning: trajectory '{}' is empty, drawing the map only\n", path);
      continue;
    }
    if (!truth.empty()) trajectory.errors = RowErrors(trajectory.rows, truth);
    trajectories.push_back(std::move(trajectory));
  }
  WriteTextFile(out_path, RenderSvg(map, trajectories));
  fmt::print(out, "wrote {}\n", out_path);
  return kExitOk;
}

int CmdExportMap(const std::string& name, const std::string& out_path, std::ostream& out) {
  const auto doc = sim::BuiltinMap(name);
  if (!doc) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown built-in map '{}'", name));
  }
  osmag::WriteOsmFile(*doc, out_path);
  fmt::print(out, "wrote {}\n", out_path);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivergence:
    case ErrorCode::kPoseOutOfMap:
    case ErrorCode::kPriorOutOfMap:
    case ErrorCode::kPlacement:
    case ErrorCode::kInsufficientData:
      return kExitAlgorithm;
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kParse:
    case ErrorCode::kReference:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kEmptyMap:
    case ErrorCode::kInvalidArgument:
      break;
  }
  return kExitUsage;
}

void PrintErrorLine(std::ostream& err, ErrorCode code, const std::string& message) {
  std::string escaped;
  for (const char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c == '\n' ? ' ' : c;
  }
  fmt::print(err, "error code={} exit={} message=\"{}\"\n", ErrorCodeName(code),
             ExitCodeFor(code), escaped);
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Area Graph lidar localization: map validation, simulation, global "
               "localization, tracking, ablations, evaluation and rendering.",
               "areagraph");
  app.require_subcommand(1);

  std::string map_path;
  int level = 0;
  auto* validate = app.add_subcommand("validate-map", "Check every osmAG map invariant");
  validate->add_option("map", map_path, "osmAG file")->required();

  std::string scene_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  auto* simulate = app.add_subcommand("simulate", "Write simulated scans and ground truth");
  simulate->add_option("--scene", scene_path, "Scene config")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  simulate->add_option("--seed", seed, "Overrides the scene seed");

  RunFlags global_flags;
  auto* global = app.add_subcommand("global-localize", "Localize one frame without odometry");
  AddRunFlags(global, &global_flags, true);

  RunFlags track_flags;
  auto* track = app.add_subcommand("track", "Track a scan sequence");
  AddRunFlags(track, &track_flags, true);

  RunFlags experiment_run;
  ExperimentFlags experiment_flags;
  auto* experiment = app.add_subcommand(
      "experiment", "Ablation table over a scene, or the global localization suite");
  AddRunFlags(experiment, &experiment_run, false);
  experiment->add_option("--suite", experiment_flags.suite, "tracking or global")
      ->check(CLI::IsMember({"tracking", "global"}));
  experiment->add_option("--weight", experiment_flags.weight, "on,off")
      ->delimiter(',')
      ->check(CLI::IsMember({"on", "off"}));
  experiment->add_option("--corridorness", experiment_flags.corridorness, "on,off")
      ->delimiter(',')
      ->check(CLI::IsMember({"on", "off"}));
  experiment->add_option("--passages", experiment_flags.passages, "adaptive,open,closed")
      ->delimiter(',')
      ->check(CLI::IsMember({"adaptive", "open", "closed"}));
  experiment->add_option("--perturb-every", experiment_flags.perturb_every,
                         "Push the estimate along its heading every N frames");
  experiment->add_option("--perturb-offset", experiment_flags.perturb_offset, "Push in meters");
  experiment->add_option("--frames-per-scene", experiment_flags.frames_per_scene,
                         "Global suite frames per scene");
  experiment->add_option("--density", experiment_flags.density, "Global suite clutter density");

  std::string estimate_path;
  std::string truth_path;
  std::string errors_path;
  double max_dt = 0.05;
  auto* evaluate = app.add_subcommand("evaluate", "Absolute trajectory error");
  evaluate->add_option("--estimate", estimate_path, "Estimated trajectory")->required();
  evaluate->add_option("--truth", truth_path, "Ground truth trajectory")->required();
  evaluate->add_option("--max-dt", max_dt, "Association window in seconds");
  evaluate->add_option("--errors", errors_path, "Write per-frame errors here");

  std::vector<std::string> trajectory_paths;
  std::string svg_path;
  auto* render = app.add_subcommand("render", "SVG of a map with trajectories");
  render->add_option("--map", map_path, "osmAG file")->required();
  render->add_option("--level", level, "Floor level");
  render->add_option("--trajectory", trajectory_paths, "Trajectory file (repeatable)");
  render->add_option("--truth", truth_path, "Ground truth, colors vertices by error");
  render->add_option("--out", svg_path, "SVG file")->required();

  auto* templ = app.add_subcommand("template", "Print a run config with every default");

  std::string builtin;
  auto* export_map = app.add_subcommand("export-map", "Write a built-in map as osmAG");
  export_map->add_option("name", builtin,
                         "square, two_rooms, room, corridor, plain_corridor or office")
      ->required();
  export_map->add_option("--out", out_dir, "osmAG file")->required();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return CmdValidateMap(map_path, out);
    if (*simulate) return CmdSimulate(scene_path, out_dir, seed, out);
    if (*global) return CmdGlobalLocalize(BuildConfig(global_flags), out);
    if (*track) return CmdTrack(BuildConfig(track_flags), out, err);
    if (*experiment) {
      return CmdExperiment(BuildConfig(experiment_run), experiment_flags, out, err);
    }
    if (*evaluate) return CmdEvaluate(estimate_path, truth_path, max_dt, errors_path, out);
    if (*render) {
      return CmdRender(map_path, level, trajectory_paths, truth_path, svg_path, out, err);
    }
    if (*templ) {
      out << RunConfigTemplate();
      return kExitOk;
    }
    if (*export_map) return CmdExportMap(builtin, out_dir, out);
  } catch (const Error& e) {
    PrintErrorLine(err, e.code(), e.what());
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    PrintErrorLine(err, ErrorCode::kIo, e.what());
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace cli
}  // namespace areagraph
