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

#include "tools/cli/run_config.h"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "areagraph/common/error.h"
#include "areagraph/common/trajectory.h"
#include "boost/property_tree/ini_parser.hpp"
#include "boost/property_tree/ptree.hpp"
#include "fmt/format.h"

namespace areagraph {
namespace cli {
namespace {

namespace pt = boost::property_tree;

constexpr double kDegree = M_PI / 180.;

std::vector<double> ParseNumbers(std::string_view text, size_t count) {
  const auto fail = [&]() {
    return Error(ErrorCode::kInvalidArgument,
                 fmt::format("expected {} comma-separated numbers, got '{}'", count, text));
  };
  std::vector<double> values;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::istringstream field(item);
    double value = 0.;
    if (!(field >> value) || !(field >> std::ws).eof()) throw fail();
    values.push_back(value);
  }
  if (values.size() != count) throw fail();
  return values;
}

std::optional<std::string> Get(const pt::ptree& tree, const std::string& key) {
  const auto value = tree.get_optional<std::string>(key);
  return value ? std::optional<std::string>(*value) : std::nullopt;
}

template <typename T>
void Read(const pt::ptree& tree, const std::string& key, T* value) {
  const auto text = Get(tree, key);
  if (!text) return;
  std::istringstream in(*text);
  T parsed{};
  if (!(in >> parsed) || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("config key '{}': cannot read '{}'", key, *text));
  }
  *value = parsed;
}

void ReadBool(const pt::ptree& tree, const std::string& key, bool* value) {
  const auto text = Get(tree, key);
  if (!text) return;
  if (*text == "true" || *text == "on" || *text == "1") {
    *value = true;
  } else if (*text == "false" || *text == "off" || *text == "0") {
    *value = false;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("config key '{}': expected true or false, got '{}'", key, *text));
  }
}

std::string ResolvePath(const std::string& path, const std::string& base_dir) {
  if (path.empty()) return path;
  const std::filesystem::path p(path);
  return p.is_absolute() ? path : (std::filesystem::path(base_dir) / p).string();
}

}  // namespace

Vec2 ParsePoint(std::string_view text) {
  const auto v = ParseNumbers(text, 2);
  return Vec2(v[0], v[1]);
}

Pose2D ParsePose(std::string_view text) {
  const auto v = ParseNumbers(text, 3);
  return Pose2D(v[0], v[1], v[2]);
}

void RunConfig::Validate() const {
  const int sources = !scan_file.empty() + !scan_dir.empty() + !scene_path.empty();
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("need exactly one scan source (scan file, scan directory or "
                            "scene), got {}",
                            sources));
  }
  if (scene_path.empty() && map_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no map given");
  }
  for (const std::string* path : {&map_path, &scan_file, &scan_dir, &scene_path, &truth_path}) {
    if (!path->empty() && !std::filesystem::exists(*path)) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("'{}' does not exist", *path));
    }
  }
}

RunConfig ParseRunConfig(std::string_view text, const std::string& base_dir) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(static_cast<int>(e.line()), e.message());
  }

  RunConfig config;
  if (Get(tree, "run.seed")) {
    std::uint64_t value = 0;
    Read(tree, "run.seed", &value);
    config.seed = value;
  }
  config.output_dir = ResolvePath(tree.get("run.output_dir", ""), base_dir);

  config.map_path = ResolvePath(tree.get("map.path", ""), base_dir);
  Read(tree, "map.level", &config.level);

  config.scan_file = ResolvePath(tree.get("scans.file", ""), base_dir);
  config.scan_dir = ResolvePath(tree.get("scans.dir", ""), base_dir);
  config.scene_path = ResolvePath(tree.get("scans.scene", ""), base_dir);
  config.truth_path = ResolvePath(tree.get("scans.truth", ""), base_dir);
  Read(tree, "scans.frame", &config.frame);

  if (const auto prior = Get(tree, "prior.position")) config.prior = ParsePoint(*prior);
  Read(tree, "prior.error", &config.prior_error);

  global::GlobalParams& g = config.global;
  if (const auto fn = Get(tree, "global.score_fn")) {
    const auto parsed = global::ParseScoreFunction(*fn);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown score function '{}'", *fn));
    }
    g.score_function = *parsed;
  }
  Read(tree, "global.radius", &g.grid.radius);
  Read(tree, "global.step", &g.grid.step);
  double angular_step_deg = g.grid.angular_step / kDegree;
  Read(tree, "global.angular_step_deg", &angular_step_deg);
  g.grid.angular_step = angular_step_deg * kDegree;
  Read(tree, "global.nearby_threshold", &g.errors.nearby_threshold);
  Read(tree, "global.outlier_penalty", &g.errors.outlier_penalty);
  Read(tree, "global.top_k", &g.top_k);

  tracking::IcpParams& icp = config.tracker.icp;
  Read(tree, "icp.max_iterations", &icp.max_iterations);
  Read(tree, "icp.trans_eps", &icp.trans_eps);
  Read(tree, "icp.rot_eps", &icp.rot_eps);
  ReadBool(tree, "icp.use_weight", &icp.use_weight);
  ReadBool(tree, "icp.use_corridorness", &icp.use_corridorness);
  if (const auto mode = Get(tree, "icp.passages")) {
    const auto parsed = geometry::ParsePassageMode(*mode);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown passage mode '{}'", *mode));
    }
    icp.passage_mode = *parsed;
  }
  Read(tree, "icp.passage_threshold", &icp.passage_threshold);
  if (const auto solver = Get(tree, "icp.solver")) {
    const auto parsed = tracking::ParseIcpSolver(*solver);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown ICP solver '{}'", *solver));
    }
    icp.solver = *parsed;
  }
  Read(tree, "icp.min_support", &icp.min_support);

  if (const auto initial = Get(tree, "tracker.initial")) config.initial_pose = ParsePose(*initial);
  ReadBool(tree, "tracker.relocalize", &config.tracker.relocalize);
  Read(tree, "tracker.relocalization_cooldown", &config.tracker.relocalization_cooldown);
  Read(tree, "tracker.z_low", &config.tracker.z_low);
  Read(tree, "tracker.z_high", &config.tracker.z_high);
  return config;
}

RunConfig LoadRunConfig(const std::string& path) {
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return ParseRunConfig(ReadTextFile(path), dir.empty() ? "." : dir);
}

std::string RunConfigTemplate() {
  const RunConfig d;
  const tracking::IcpParams& icp = d.tracker.icp;
  const auto on = [](bool b) { return b ? "true" : "false"; };
  return fmt::format(
      "; Localization run. Comments go on their own line.\n"
      "[run]\n"
      "; scene seed when unset\n"
      ";seed = 1\n"
      "output_dir = out\n"
      "\n"
      "[map]\n"
      "; osmAG file; may be left out when the scans come from a scene\n"
      "path = map.osm\n"
      "level = {}\n"
      "\n"
      "[scans]\n"
      "; exactly one of file, dir, scene\n"
      ";file = scan.txt\n"
      ";dir = scans\n"
      "scene = scene.ini\n"
      ";truth = ground_truth.txt\n"
      "frame = {}\n"
      "\n"
      "[prior]\n"
      "; x,y in map meters; drawn around the true pose when unset\n"
      ";position = 12.5,1.25\n"
      "error = {}\n"
      "\n"
      "[global]\n"
      "; s1, s2, s3 or s4\n"
      "score_fn = {}\n"
      "radius = {}\n"
      "step = {}\n"
      "angular_step_deg = {}\n"
      "nearby_threshold = {}\n"
      "outlier_penalty = {}\n"
      "top_k = {}\n"
      "\n"
      "[icp]\n"
      "max_iterations = {}\n"
      "trans_eps = {}\n"
      "rot_eps = {}\n"
      "use_weight = {}\n"
      "use_corridorness = {}\n"
      "; adaptive, open or closed\n"
      "passages = {}\n"
      "passage_threshold = {}\n"
      "; closed_form or point_to_line\n"
      "solver = {}\n"
      "min_support = {}\n"
      "\n"
      "[tracker]\n"
      "; x,y,theta_rad; the first true pose of a scene when unset\n"
      ";initial = 12.5,6,0\n"
      "relocalize = {}\n"
      "relocalization_cooldown = {}\n"
      "z_low = {}\n"
      "z_high = {}\n",
      d.level, d.frame, d.prior_error, global::ToString(d.global.score_function),
      d.global.grid.radius, d.global.grid.step,
      std::round(d.global.grid.angular_step / kDegree * 1e9) / 1e9,
      d.global.errors.nearby_threshold, d.global.errors.outlier_penalty, d.global.top_k,
      icp.max_iterations, icp.trans_eps, icp.rot_eps, on(icp.use_weight),
      on(icp.use_corridorness), geometry::ToString(icp.passage_mode), icp.passage_threshold,
      tracking::ToString(icp.solver), icp.min_support, on(d.tracker.relocalize),
      d.tracker.relocalization_cooldown, d.tracker.z_low, d.tracker.z_high);
}

}  // namespace cli
}  // namespace areagraph
