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

#ifndef AREAGRAPH_COMMON_TRAJECTORY_H_
#define AREAGRAPH_COMMON_TRAJECTORY_H_

#include <string>
#include <string_view>
#include <vector>

#include "areagraph/common/pose2d.h"

namespace areagraph {

struct TrajectoryRow {
  double timestamp = 0.;
  Pose2D pose;
  bool converged = true;
};

enum class TrajectoryFormat {
  kPlain,       // timestamp x y theta_rad converged_flag
  kQuaternion,  // timestamp x y 0 0 0 sin(theta/2) cos(theta/2)
};

std::string SerializeTrajectory(const std::vector<TrajectoryRow>& rows,
                                TrajectoryFormat format = TrajectoryFormat::kPlain);

// Accepts both formats, line by line; '#' starts a comment. Four-field lines
// (no flag) read as converged. Throws ParseError.
std::vector<TrajectoryRow> ParseTrajectory(std::string_view text);

void WriteTrajectoryFile(const std::vector<TrajectoryRow>& rows,
                         const std::string& path,
                         TrajectoryFormat format = TrajectoryFormat::kPlain);
std::vector<TrajectoryRow> ReadTrajectoryFile(const std::string& path);

// Reads a whole file; throws Error(kIo).
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace areagraph

#endif  // AREAGRAPH_COMMON_TRAJECTORY_H_
