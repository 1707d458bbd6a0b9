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

#include "areagraph/eval/metrics.h"

#include <algorithm>
#include <cmath>

#include "areagraph/common/error.h"
#include "fmt/format.h"

namespace areagraph {
namespace eval {

AteReport ComputeAte(const std::vector<TrajectoryRow>& estimate,
                     const std::vector<TrajectoryRow>& truth, double max_dt) {
  if (truth.empty()) {
    throw Error(ErrorCode::kInsufficientData, "ground truth is empty");
  }
  std::vector<TrajectoryRow> sorted = truth;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TrajectoryRow& a, const TrajectoryRow& b) {
                     return a.timestamp < b.timestamp;
                   });
  AteReport report;
  double sum_sq = 0.;
  double rot_sq = 0.;
  for (const TrajectoryRow& row : estimate) {
    if (!row.converged) ++report.flagged;
    const auto it = std::lower_bound(
        sorted.begin(), sorted.end(), row.timestamp,
        [](const TrajectoryRow& r, double t) { return r.timestamp < t; });
    const TrajectoryRow* best = nullptr;
    if (it != sorted.end()) best = &*it;
    if (it != sorted.begin()) {
      const TrajectoryRow* before = &*(it - 1);
      if (best == nullptr ||
          row.timestamp - before->timestamp <= best->timestamp - row.timestamp) {
        best = before;
      }
    }
    if (best == nullptr || std::abs(best->timestamp - row.timestamp) > max_dt) {
      ++report.unmatched;
      continue;
    }
    const double error = (row.pose.translation() - best->pose.translation()).norm();
    const double rotation = AngleDifference(row.pose.theta, best->pose.theta);
    report.errors.push_back(error);
    report.ate_max = std::max(report.ate_max, error);
    sum_sq += error * error;
    rot_sq += rotation * rotation;
    ++report.matched;
  }
  if (report.matched < 2) {
    throw Error(ErrorCode::kInsufficientData,
                fmt::format("only {} estimate rows match a ground-truth timestamp",
                            report.matched));
  }
  report.ate_rmse = std::sqrt(sum_sq / report.matched);
  report.rotation_rmse = std::sqrt(rot_sq / report.matched);
  return report;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.;
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

std::string FormatAte(const AteReport& report) {
  return fmt::format("ate_rmse={:.4f} ate_max={:.4f} rot_rmse_deg={:.3f} frames={} "
                     "unmatched={} flagged={}",
                     report.ate_rmse, report.ate_max,
                     report.rotation_rmse * 180. / M_PI, report.matched,
                     report.unmatched, report.flagged);
}

}  // namespace eval
}  // namespace areagraph
