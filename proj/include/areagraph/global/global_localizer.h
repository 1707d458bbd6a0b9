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

#ifndef AREAGRAPH_GLOBAL_GLOBAL_LOCALIZER_H_
#define AREAGRAPH_GLOBAL_GLOBAL_LOCALIZER_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "areagraph/common/pose2d.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/osmag/area_graph.h"
#include "areagraph/scan/organized_scan.h"

namespace areagraph {
namespace global {

enum class ScoreFunction {
  kS1,  // 1 / E1
  kS2,  // E2
  kS3,  // E2 / E1
  kS4,  // 1 / E3
};

inline constexpr std::array<ScoreFunction, 4> kAllScoreFunctions = {
    ScoreFunction::kS1, ScoreFunction::kS2, ScoreFunction::kS3,
    ScoreFunction::kS4};

std::optional<ScoreFunction> ParseScoreFunction(std::string_view text);
std::string_view ToString(ScoreFunction fn);

struct GridParams {
  double radius = 6.;
  double step = 0.5;
  double angular_step = 2. * M_PI / 180.;
};

struct Guess {
  Pose2D pose;
  osmag::AreaId area = 0;
};

struct GuessGrid {
  Vec2 center = Vec2::Zero();
  GridParams params;
  // Lattice positions inside the disc, before dropping those off the map.
  int lattice_positions = 0;
  int orientations = 0;
  // Position-major: all orientations of one position are contiguous.
  std::vector<Guess> guesses;
};

// Square lattice center + (i, j) * step clipped to the disc, with the full
// sweep of orientations k * angular_step at each position. Positions outside
// every area are dropped; throws Error(kPriorOutOfMap) if none remain and
// Error(kInvalidArgument) on non-positive steps.
GuessGrid SampleGuesses(const osmag::AreaGraph& map, const Vec2& prior,
                        const GridParams& params);

struct ErrorParams {
  double nearby_threshold = 0.8;  // d
  double outlier_penalty = 2.;
};

struct ErrorSums {
  double e1 = 0.;  // nearby_error
  double e2 = 0.;  // weighted_outside_fit
  double e3 = 0.;  // unweighted_outside_error
};

// Adds one matched point with signed distance 'sd'.
void AccumulateHit(double sd, const ErrorParams& params, ErrorSums* sums);
// A ray that found no boundary.
void AccumulateMiss(const ErrorParams& params, ErrorSums* sums);

// Higher is better. A zero divisor gives +infinity.
double Score(ScoreFunction fn, const ErrorSums& sums);

struct ScoredGuess {
  Pose2D pose;
  osmag::AreaId area = 0;
  double e1 = 0.;
  double e2 = 0.;
  double e3 = 0.;
  double score = 0.;
};

// Ranking order: higher score first, then lexicographically smaller pose.
bool RanksBefore(const ScoredGuess& a, const ScoredGuess& b);

struct GlobalParams {
  GridParams grid;
  ErrorParams errors;
  ScoreFunction score_function = ScoreFunction::kS1;
  geometry::CastOptions cast;
  int top_k = 10;
};

ErrorSums EvaluateErrors(const geometry::RayCaster& caster, const Guess& guess,
                         const scan::ClutterFreePointSet& points,
                         const ErrorParams& errors,
                         const geometry::CastOptions& cast = {});

ScoredGuess ScoreGuess(const geometry::RayCaster& caster, const Guess& guess,
                       const scan::ClutterFreePointSet& points,
                       ScoreFunction fn, const GlobalParams& params);

struct GlobalResult {
  ScoreFunction score_function = ScoreFunction::kS1;
  ScoredGuess best;
  std::vector<ScoredGuess> top;  // Best first, at most top_k.
  size_t guess_count = 0;
};

// Scores every guess around 'prior' with params.score_function and returns
// the best one.
GlobalResult GlobalLocalize(const geometry::RayCaster& caster, const Vec2& prior,
                            const scan::ClutterFreePointSet& points,
                            const GlobalParams& params);

// One ray-casting pass over the grid, ranked under each score function in
// kAllScoreFunctions order. params.score_function is ignored.
std::array<GlobalResult, 4> GlobalLocalizeAll(
    const geometry::RayCaster& caster, const Vec2& prior,
    const scan::ClutterFreePointSet& points, const GlobalParams& params);

// Text table, one row per guess: x y theta_deg area_id E1 E2 E3 score.
std::string FormatScoreReport(const std::vector<ScoredGuess>& guesses);

}  // namespace global
}  // namespace areagraph

#endif  // AREAGRAPH_GLOBAL_GLOBAL_LOCALIZER_H_
