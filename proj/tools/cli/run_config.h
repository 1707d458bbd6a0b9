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

#ifndef AREAGRAPH_TOOLS_CLI_RUN_CONFIG_H_
#define AREAGRAPH_TOOLS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "areagraph/common/pose2d.h"
#include "areagraph/global/global_localizer.h"
#include "areagraph/tracking/pose_tracker.h"

namespace areagraph {
namespace cli {

// Everything a localization run needs. Read from an INI file (see
// RunConfigTemplate) and then overridden by command line flags.
struct RunConfig {
  std::string map_path;
  int level = 0;

  // Scan source: one scan file, a directory of scan files, or a simulator
  // scene config.
  std::string scan_file;
  std::string scan_dir;
  std::string scene_path;
  std::string truth_path;  // Optional ground truth trajectory.
  int frame = 0;           // Frame used by global-localize.

  std::optional<Vec2> prior;
  double prior_error = 0.25;  // Simulated prior noise radius.
  std::optional<Pose2D> initial_pose;

  global::GlobalParams global;
  tracking::TrackerParams tracker;

  std::string output_dir;
  std::optional<std::uint64_t> seed;  // Defaults to the scene seed.

  // Throws Error(kInvalidArgument) unless exactly one scan source is set and
  // every referenced path exists.
  void Validate() const;
};

// Throws ParseError or Error(kInvalidArgument). Relative paths are resolved
// against 'base_dir'.
RunConfig ParseRunConfig(std::string_view text, const std::string& base_dir = ".");
RunConfig LoadRunConfig(const std::string& path);

// A config file with every default spelled out.
std::string RunConfigTemplate();

// "x,y" and "x,y,theta" (radians).
Vec2 ParsePoint(std::string_view text);
Pose2D ParsePose(std::string_view text);

}  // namespace cli
}  // namespace areagraph

#endif  // AREAGRAPH_TOOLS_CLI_RUN_CONFIG_H_
