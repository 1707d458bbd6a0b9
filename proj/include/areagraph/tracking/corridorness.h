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

#ifndef AREAGRAPH_TRACKING_CORRIDORNESS_H_
#define AREAGRAPH_TRACKING_CORRIDORNESS_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "areagraph/geometry/ray_caster.h"

namespace areagraph {
namespace tracking {

inline constexpr int kOrientationBins = 36;  // 5 degrees each over [0, pi).

int OrientationBin(double orientation);

struct OrientationHistogram {
  std::array<int, kOrientationBins> bins{};
  int total = 0;
  int max_bin = 0;  // Lowest index among the fullest bins.

  int max_count() const { return bins[max_bin]; }
  friend bool operator==(const OrientationHistogram&,
                         const OrientationHistogram&) = default;
};

struct Corridorness {
  double value = 0.;  // N_max / N_m
  OrientationHistogram histogram;
};

// Histogram of the orientations of the matched map segments. nullopt for an
// empty input.
std::optional<Corridorness> ComputeCorridorness(
    std::span<const geometry::IntersectionResult> hits);

// 1 up to Cor = 0.5, then 10 Cor - 4.
double DownsampleRate(double corridorness);

// Indices into 'hits' that survive thinning. Hits in the dominant bin are
// reduced to ceil(count / rate) by an even fractional stride in input order;
// every other hit is kept.
std::vector<int> CorridorDownsample(
    std::span<const geometry::IntersectionResult> hits,
    const OrientationHistogram& histogram, double rate);

}  // namespace tracking
}  // namespace areagraph

#endif  // AREAGRAPH_TRACKING_CORRIDORNESS_H_
