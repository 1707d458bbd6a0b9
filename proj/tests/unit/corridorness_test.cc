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
#include <random>

#include "areagraph/osmag/area_graph.h"
#include "areagraph/sim/scenes.h"
#include "gtest/gtest.h"

namespace areagraph {
namespace tracking {
namespace {

constexpr double kDegree = M_PI / 180.;

std::vector<geometry::IntersectionResult> HitsWithOrientations(
    const std::vector<double>& degrees) {
  std::vector<geometry::IntersectionResult> hits(degrees.size());
  for (size_t i = 0; i < degrees.size(); ++i) {
    hits[i].segment_orientation = degrees[i] * kDegree;
  }
  return hits;
}

std::vector<double> Repeat(double degrees, int count) {
  return std::vector<double>(count, degrees);
}

std::vector<double> Concat(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(CorridornessTest, SquareRoomIsOneHalf) {
  const auto hits = HitsWithOrientations(Concat(Repeat(0., 50), Repeat(90., 50)));
  const auto cor = ComputeCorridorness(hits);
  ASSERT_TRUE(cor.has_value());
  EXPECT_NEAR(0.5, cor->value, 1e-12);
  EXPECT_EQ(100, cor->histogram.total);
  EXPECT_EQ(0, cor->histogram.max_bin);  // Tie: lowest bin.
}

TEST(CorridornessTest, SingleWallIsOne) {
  const auto cor = ComputeCorridorness(HitsWithOrientations(Repeat(37., 20)));
  ASSERT_TRUE(cor.has_value());
  EXPECT_NEAR(1.0, cor->value, 1e-12);
  EXPECT_EQ(7, cor->histogram.max_bin);
}

TEST(CorridornessTest, ThreeOrientations) {
  const auto hits = HitsWithOrientations(
      Concat(Concat(Repeat(10., 6), Repeat(100., 3)), Repeat(150., 1)));
  const auto cor = ComputeCorridorness(hits);
  ASSERT_TRUE(cor.has_value());
  EXPECT_NEAR(0.6, cor->value, 1e-12);
  EXPECT_EQ(2, cor->histogram.max_bin);
}

TEST(CorridornessTest, EmptyInputIsUndefined) {
  EXPECT_FALSE(ComputeCorridorness({}).has_value());
}

TEST(CorridornessTest, HistogramSumsToTotal) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0., 180.);
  std::vector<double> degrees;
  for (int i = 0; i < 500; ++i) degrees.push_back(angle(rng));
  const auto cor = ComputeCorridorness(HitsWithOrientations(degrees));
  ASSERT_TRUE(cor.has_value());
  int sum = 0;
  for (const int count : cor->histogram.bins) sum += count;
  EXPECT_EQ(cor->histogram.total, sum);
  EXPECT_EQ(*std::max_element(cor->histogram.bins.begin(), cor->histogram.bins.end()),
            cor->histogram.max_count());
}

TEST(CorridornessTest, NearlyHorizontalWrapsToFirstBin) {
  EXPECT_EQ(0, OrientationBin(0.));
  EXPECT_EQ(0, OrientationBin(M_PI - 1e-12));
  EXPECT_EQ(18, OrientationBin(M_PI / 2.));
  EXPECT_EQ(18, OrientationBin(M_PI / 2. - 1e-12));
  EXPECT_EQ(1, OrientationBin(7.5 * kDegree));
  EXPECT_EQ(35, OrientationBin(177. * kDegree));
}

TEST(DownsampleRateTest, PiecewiseLinear) {
  EXPECT_EQ(1., DownsampleRate(0.5));
  EXPECT_EQ(1., DownsampleRate(0.2));
  EXPECT_NEAR(6., DownsampleRate(1.0), 1e-12);
  EXPECT_NEAR(3., DownsampleRate(0.7), 1e-12);
  EXPECT_NEAR(1.5, DownsampleRate(0.55), 1e-12);
}

TEST(CorridorDownsampleTest, RateOneKeepsEverything) {
  const auto hits = HitsWithOrientations(Concat(Repeat(0., 5), Repeat(90., 5)));
  const auto cor = ComputeCorridorness(hits);
  const std::vector<int> kept = CorridorDownsample(hits, cor->histogram, 1.);
  EXPECT_EQ(10u, kept.size());
}

TEST(CorridorDownsampleTest, SixtyDominantPointsLeaveTen) {
  const auto hits = HitsWithOrientations(Repeat(0., 60));
  const auto cor = ComputeCorridorness(hits);
  const std::vector<int> kept =
      CorridorDownsample(hits, cor->histogram, DownsampleRate(cor->value));
  ASSERT_EQ(10u, kept.size());
  for (int k = 0; k < 10; ++k) EXPECT_EQ(6 * k, kept[k]);
}

TEST(CorridorDownsampleTest, NineDominantAtRateThreeLeaveThree) {
  // Dominant points interleaved with other orientations.
  std::vector<double> degrees;
  for (int i = 0; i < 9; ++i) {
    degrees.push_back(0.);
    if (i % 3 == 0) degrees.push_back(60.);
  }
  degrees.push_back(120.);
  const auto hits = HitsWithOrientations(degrees);
  const auto cor = ComputeCorridorness(hits);
  ASSERT_EQ(0, cor->histogram.max_bin);
  const std::vector<int> kept = CorridorDownsample(hits, cor->histogram, 3.);
  int dominant = 0;
  int other = 0;
  for (const int index : kept) {
    (hits[index].segment_orientation == 0. ? dominant : other)++;
  }
  EXPECT_EQ(3, dominant);
  EXPECT_EQ(4, other);
}

TEST(CorridorDownsampleTest, RandomizedProperties) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> size(1, 400);
  std::uniform_int_distribution<int> orientations(1, 5);
  std::uniform_real_distribution<double> angle(0., 180.);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> palette(orientations(rng));
    for (double& a : palette) a = angle(rng);
    std::uniform_int_distribution<size_t> pick(0, palette.size() - 1);
    std::vector<double> degrees(size(rng));
    // Skewed so that high corridorness values show up often.
    for (double& d : degrees) d = palette[std::min(pick(rng), pick(rng))];
    const auto hits = HitsWithOrientations(degrees);
    const auto cor = ComputeCorridorness(hits);
    ASSERT_TRUE(cor.has_value());
    const double rate = DownsampleRate(cor->value);
    const std::vector<int> kept = CorridorDownsample(hits, cor->histogram, rate);

    ASSERT_TRUE(std::is_sorted(kept.begin(), kept.end()));
    ASSERT_TRUE(std::adjacent_find(kept.begin(), kept.end()) == kept.end());
    const int n = static_cast<int>(hits.size());
    const int dominant = cor->histogram.max_count();
    int kept_dominant = 0;
    std::vector<char> is_kept(hits.size(), 0);
    for (const int index : kept) is_kept[index] = 1;
    for (int i = 0; i < n; ++i) {
      const bool in_max = OrientationBin(hits[i].segment_orientation) ==
                          cor->histogram.max_bin;
      if (!in_max) {
        ASSERT_TRUE(is_kept[i]) << "trial " << trial << " dropped point " << i;
      } else if (is_kept[i]) {
        ++kept_dominant;
      }
    }
    const double bound = n - dominant * (1. - 1. / rate) - 1.;
    EXPECT_GE(static_cast<double>(kept.size()), bound) << "trial " << trial;
    EXPECT_EQ(static_cast<int>(std::ceil(dominant / rate - 1e-9)), kept_dominant)
        << "trial " << trial;
  }
}

TEST(CorridornessTest, InvariantUnderEpsilonPoseChange) {
  const osmag::AreaGraph map = osmag::LoadFloor(sim::ClutteredRoomMap(), 0);
  const geometry::RayCaster caster(map);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0., 2. * M_PI);
  std::uniform_real_distribution<double> range(1., 8.);
  scan::ClutterFreePointSet points;
  for (int i = 0; i < 360; ++i) {
    const double a = angle(rng);
    points.points.push_back(range(rng) * Vec2(std::cos(a), std::sin(a)));
    points.column_of.push_back(i);
  }
  const Pose2D pose(4.2, 3.1, 0.7);
  const Pose2D nudged(std::nextafter(pose.x, 10.), std::nextafter(pose.y, 10.),
                      std::nextafter(pose.theta, 10.));
  const auto area = map.LocateArea(pose.translation());
  ASSERT_TRUE(area.has_value());
  const auto a = ComputeCorridorness(caster.BatchIntersect(*area, pose, points).hits);
  const auto b = ComputeCorridorness(caster.BatchIntersect(*area, nudged, points).hits);
  ASSERT_TRUE(a.has_value());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(a->histogram, b->histogram);
  EXPECT_EQ(a->value, b->value);
}

}  // namespace
}  // namespace tracking
}  // namespace areagraph
