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

#include "areagraph/tracking/corridorness.h"

#include <algorithm>
#include <cmath>

namespace areagraph {
namespace tracking {

int OrientationBin(double orientation) {
  // Edges sit 1e-6 bin widths low, so 179.9999999 deg wraps to bin 0.
  constexpr double kEdgeSlack = 1e-6;
  const int bin = static_cast<int>(
      std::floor(orientation / (M_PI / kOrientationBins) + kEdgeSlack));
  return ((bin % kOrientationBins) + kOrientationBins) % kOrientationBins;
}

std::optional<Corridorness> ComputeCorridorness(
    std::span<const geometry::IntersectionResult> hits) {
  if (hits.empty()) return std::nullopt;
  Corridorness result;
  OrientationHistogram& histogram = result.histogram;
  for (const auto& hit : hits) {
    ++histogram.bins[OrientationBin(hit.segment_orientation)];
  }
  histogram.total = static_cast<int>(hits.size());
  histogram.max_bin = static_cast<int>(
      std::max_element(histogram.bins.begin(), histogram.bins.end()) -
      histogram.bins.begin());
  result.value = static_cast<double>(histogram.max_count()) / histogram.total;
  return result;
}

double DownsampleRate(double corridorness) {
  return corridorness <= 0.5 ? 1. : 10. * corridorness - 4.;
}

std::vector<int> CorridorDownsample(
    std::span<const geometry::IntersectionResult> hits,
    const OrientationHistogram& histogram, double rate) {
  std::vector<int> dominant;
  std::vector<int> kept;
  kept.reserve(hits.size());
  for (size_t i = 0; i < hits.size(); ++i) {
    if (OrientationBin(hits[i].segment_orientation) == histogram.max_bin) {
      dominant.push_back(static_cast<int>(i));
    }
  }
  const int count = static_cast<int>(dominant.size());
  int survivors = count;
  if (rate > 1. && count > 0) {
    // The epsilon absorbs rounding in 10 Cor - 4 (e.g. 3.0000000000000004).
    survivors = std::max(1, static_cast<int>(std::ceil(count / rate - 1e-9)));
  }
  // Survivor k is dominant point floor(k * count / survivors).
  std::vector<char> keep_dominant(hits.size(), 0);
  for (int k = 0; k < survivors; ++k) {
    keep_dominant[dominant[static_cast<size_t>(k) * count / survivors]] = 1;
  }
  size_t next_dominant = 0;
  for (size_t i = 0; i < hits.size(); ++i) {
    const bool is_dominant =
        next_dominant < dominant.size() && dominant[next_dominant] == static_cast<int>(i);
    if (is_dominant) ++next_dominant;
    if (!is_dominant || keep_dominant[i]) kept.push_back(static_cast<int>(i));
  }
  return kept;
}

}  // namespace tracking
}  // namespace areagraph
