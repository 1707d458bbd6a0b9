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

#ifndef AREAGRAPH_EVAL_METRICS_H_
#define AREAGRAPH_EVAL_METRICS_H_

#include <string>
#include <vector>

#include "areagraph/common/trajectory.h"

namespace areagraph {
namespace eval {

struct AteReport {
  double ate_max = 0.;   // m
  double ate_rmse = 0.;  // m
  double rotation_rmse = 0.;  // rad
  std::vector<double> errors;  // Per matched estimate row, m.
  int matched = 0;
  int unmatched = 0;  // Estimate rows with no truth within max_dt.
  int flagged = 0;    // Estimate rows with converged_flag = 0.
};

// Pairs every estimate row with the ground-truth row nearest in time, if
// within max_dt seconds. No alignment: both live in the map frame.
AteReport ComputeAte(const std::vector<TrajectoryRow>& estimate,
                     const std::vector<TrajectoryRow>& truth,
                     double max_dt = 0.05);

double Median(std::vector<double> values);

// One-line summary, e.g. "ate_rmse=0.041 ate_max=0.130 frames=300".
std::string FormatAte(const AteReport& report);

}  // namespace eval
}  // namespace areagraph

#endif  // AREAGRAPH_EVAL_METRICS_H_
