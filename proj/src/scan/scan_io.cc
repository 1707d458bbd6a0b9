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

#include "areagraph/scan/scan_io.h"

#include <fstream>
#include <sstream>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {
namespace scan {

std::string SerializeScan(const OrganizedScan& scan) {
  std::string out = fmt::format("{} {} {}\n", scan.rings(), scan.columns(),
                                scan.timestamp());
  for (int ring = 0; ring < scan.rings(); ++ring) {
    for (int column = 0; column < scan.columns(); ++column) {
      if (!scan.valid(ring, column)) continue;
      const Vec3& p = scan.point(ring, column);
      out += fmt::format("{} {} {} {} {}\n", ring, column, p.x(), p.y(), p.z());
    }
  }
  return out;
}

OrganizedScan ParseScan(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;

  int rings = 0;
  int columns = 0;
  double timestamp = 0.;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream header(line);
    if (!(header >> rings >> columns >> timestamp)) {
      throw ParseError(line_number, "expected header 'N M timestamp'");
    }
    break;
  }
  if (rings < 1 || columns < 1) {
    throw ParseError(line_number, "missing or invalid scan header");
  }

  OrganizedScan scan(rings, columns, timestamp);
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int ring = 0;
    int column = 0;
    double x = 0.;
    double y = 0.;
    double z = 0.;
    if (!(fields >> ring >> column >> x >> y >> z)) {
      throw ParseError(line_number, "expected 'ring azimuth_bin x y z'");
    }
    if (ring < 0 || ring >= rings || column < 0 || column >= columns) {
      throw ParseError(line_number,
                       fmt::format("cell ({}, {}) outside {}x{} scan", ring,
                                   column, rings, columns));
    }
    const Vec3 p(x, y, z);
    if (scan.valid(ring, column) && scan.point(ring, column).norm() <= p.norm()) {
      continue;
    }
    scan.Set(ring, column, p);
  }
  return scan;
}

void WriteScanFile(const OrganizedScan& scan, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write scan file '" + path + "'");
  out << SerializeScan(scan);
}

OrganizedScan ReadScanFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scan file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScan(buffer.str());
}

}  // namespace scan
}  // namespace areagraph
