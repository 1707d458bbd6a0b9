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

#include "areagraph/common/trajectory.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {

std::string SerializeTrajectory(const std::vector<TrajectoryRow>& rows,
                                TrajectoryFormat format) {
  std::string out;
  for (const TrajectoryRow& row : rows) {
    const Pose2D& p = row.pose;
    if (format == TrajectoryFormat::kPlain) {
      out += fmt::format("{:.6f} {} {} {} {}\n", row.timestamp, p.x, p.y,
                         p.theta, row.converged ? 1 : 0);
    } else {
      out += fmt::format("{:.6f} {} {} 0 0 0 {} {}\n", row.timestamp, p.x, p.y,
                         std::sin(p.theta / 2.), std::cos(p.theta / 2.));
    }
  }
  return out;
}

std::vector<TrajectoryRow> ParseTrajectory(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<TrajectoryRow> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    std::istringstream fields(line);
    std::vector<double> values;
    double value = 0.;
    while (fields >> value) values.push_back(value);
    if (!fields.eof()) {
      throw ParseError(line_number, "non-numeric trajectory field");
    }
    if (values.empty()) continue;
    TrajectoryRow row;
    row.timestamp = values[0];
    if (values.size() == 4 || values.size() == 5) {
      row.pose = Pose2D(values[1], values[2], values[3]);
      row.converged = values.size() == 4 || values[4] != 0.;
    } else if (values.size() == 8) {
      row.pose = Pose2D(values[1], values[2], 2. * std::atan2(values[6], values[7]));
    } else {
      throw ParseError(line_number,
                       fmt::format("expected 4, 5 or 8 fields, got {}", values.size()));
    }
    rows.push_back(row);
  }
  return rows;
}

void WriteTrajectoryFile(const std::vector<TrajectoryRow>& rows,
                         const std::string& path, TrajectoryFormat format) {
  WriteTextFile(path, SerializeTrajectory(rows, format));
}

std::vector<TrajectoryRow> ReadTrajectoryFile(const std::string& path) {
  return ParseTrajectory(ReadTextFile(path));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace areagraph
