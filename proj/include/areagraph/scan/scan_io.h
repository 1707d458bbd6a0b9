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

#ifndef AREAGRAPH_SCAN_SCAN_IO_H_
#define AREAGRAPH_SCAN_SCAN_IO_H_

#include <string>
#include <string_view>

#include "areagraph/scan/organized_scan.h"

namespace areagraph {
namespace scan {

// Plain text scan format:
//   N M timestamp
//   ring azimuth_bin x y z      (one line per valid return)
std::string SerializeScan(const OrganizedScan& scan);
OrganizedScan ParseScan(std::string_view text);

void WriteScanFile(const OrganizedScan& scan, const std::string& path);
OrganizedScan ReadScanFile(const std::string& path);

}  // namespace scan
}  // namespace areagraph

#endif  // AREAGRAPH_SCAN_SCAN_IO_H_
