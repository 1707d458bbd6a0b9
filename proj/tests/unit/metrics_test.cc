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

#include <cmath>

#include "areagraph/common/error.h"
#include "gtest/gtest.h"

namespace areagraph {
namespace eval {
namespace {

std::vector<TrajectoryRow> Line(int n, double y_offset = 0., double dt = 0.1) {
  std::vector<TrajectoryRow> rows;
  for (int i = 0; i < n; ++i) {
    rows.push_back({i * dt, Pose2D(0.1 * i, y_offset, 0.), true});
  }
  return rows;
}

TEST(AteTest, IdenticalTrajectoriesHaveZeroError) {
  const AteReport report = ComputeAte(Line(20), Line(20));
  EXPECT_EQ(0., report.ate_rmse);
  EXPECT_EQ(0., report.ate_max);
  EXPECT_EQ(20, report.matched);
  EXPECT_EQ(20u, report.errors.size());
}

TEST(AteTest, ConstantOffset) {
  const AteReport report = ComputeAte(Line(20, 0.1), Line(20));
  EXPECT_NEAR(0.1, report.ate_rmse, 1e-12);
  EXPECT_NEAR(0.1, report.ate_max, 1e-12);
}

TEST(AteTest, TwoErrors) {
  const std::vector<TrajectoryRow> truth = {{0., Pose2D(0., 0., 0.), true},
                                            {1., Pose2D(0., 0., 0.), true}};
  const std::vector<TrajectoryRow> estimate = {{0., Pose2D(0.3, 0., 0.), true},
                                               {1., Pose2D(0., 0.4, 0.), true}};
  const AteReport report = ComputeAte(estimate, truth);
  EXPECT_NEAR(0.4, report.ate_max, 1e-12);
  EXPECT_NEAR(std::sqrt(0.125), report.ate_rmse, 1e-12);
  EXPECT_LE(report.ate_rmse, report.ate_max);
}

TEST(AteTest, NearestTimestampWithinFiftyMilliseconds) {
  const std::vector<TrajectoryRow> truth = {{0., Pose2D(0., 0., 0.), true},
                                            {1., Pose2D(1., 0., 0.), true},
                                            {2., Pose2D(2., 0., 0.), true}};
  const std::vector<TrajectoryRow> estimate = {{0.04, Pose2D(0., 0., 0.), true},
                                               {0.96, Pose2D(1., 0., 0.), false},
                                               {1.5, Pose2D(9., 9., 0.), true},
                                               {2.0, Pose2D(2., 0., 0.), true}};
  const AteReport report = ComputeAte(estimate, truth);
  EXPECT_EQ(3, report.matched);
  EXPECT_EQ(1, report.unmatched);
  EXPECT_EQ(1, report.flagged);
  EXPECT_EQ(0., report.ate_max);
}

TEST(AteTest, TooFewPairsIsInsufficientData) {
  try {
    ComputeAte(Line(1), Line(5));
    FAIL() << "expected insufficient data";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kInsufficientData, e.code());
  }
  EXPECT_THROW(ComputeAte(Line(5, 0., 1.), {}), Error);
  // Shifted by 0.5 s: nothing associates.
  std::vector<TrajectoryRow> late = Line(5, 0., 1.);
  for (auto& row : late) row.timestamp += 0.5;
  EXPECT_THROW(ComputeAte(late, Line(5, 0., 1.)), Error);
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(2., Median({3., 1., 2.}));
  EXPECT_EQ(2.5, Median({4., 1., 2., 3.}));
  EXPECT_EQ(0., Median({}));
}

}  // namespace
}  // namespace eval
}  // namespace areagraph
