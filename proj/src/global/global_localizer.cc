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

#include "areagraph/global/global_localizer.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "areagraph/common/error.h"
#include "areagraph/geometry/weight.h"
#include "fmt/format.h"

namespace areagraph {
namespace global {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double Reciprocal(double value) { return value == 0. ? kInfinity : 1. / value; }

ScoredGuess MakeScored(const Guess& guess, const ErrorSums& sums,
                       ScoreFunction fn) {
  return {guess.pose, guess.area, sums.e1, sums.e2, sums.e3, Score(fn, sums)};
}

GlobalResult Rank(const GuessGrid& grid, const std::vector<ErrorSums>& sums,
                  ScoreFunction fn, int top_k) {
  std::vector<ScoredGuess> scored;
  scored.reserve(grid.guesses.size());
  for (size_t i = 0; i < grid.guesses.size(); ++i) {
    scored.push_back(MakeScored(grid.guesses[i], sums[i], fn));
  }
  const size_t keep =
      std::min(scored.size(), static_cast<size_t>(std::max(top_k, 1)));
  std::partial_sort(scored.begin(), scored.begin() + keep, scored.end(),
                    RanksBefore);
  GlobalResult result;
  result.score_function = fn;
  result.best = scored.front();
  result.top.assign(scored.begin(), scored.begin() + keep);
  result.guess_count = scored.size();
  return result;
}

std::vector<ErrorSums> EvaluateGrid(const geometry::RayCaster& caster,
                                    const GuessGrid& grid,
                                    const scan::ClutterFreePointSet& points,
                                    const GlobalParams& params) {
  // Every position shares the same orientation sweep, so rotate once.
  std::vector<std::vector<Vec2>> rotated(grid.orientations);
  for (int k = 0; k < grid.orientations; ++k) {
    const Eigen::Matrix2d rotation =
        Pose2D(0., 0., k * grid.params.angular_step).rotation();
    rotated[k].reserve(points.size());
    for (const Vec2& p : points.points) rotated[k].push_back(rotation * p);
  }

  std::vector<ErrorSums> sums(grid.guesses.size());
  for (size_t first = 0; first < grid.guesses.size();
       first += grid.orientations) {
    const Guess& anchor = grid.guesses[first];
    const Vec2 origin = anchor.pose.translation();
    const auto segments = caster.SegmentsOf(anchor.area);
    for (int k = 0; k < grid.orientations; ++k) {
      ErrorSums& out = sums[first + k];
      for (const Vec2& p : rotated[k]) {
        const auto hit =
            caster.CastMapPoint(segments, origin, origin + p, params.cast);
        if (hit) {
          AccumulateHit(hit->sd, params.errors, &out);
        } else {
          AccumulateMiss(params.errors, &out);
        }
      }
    }
  }
  return sums;
}

}  // namespace

std::optional<ScoreFunction> ParseScoreFunction(std::string_view text) {
  if (text == "s1" || text == "S1") return ScoreFunction::kS1;
  if (text == "s2" || text == "S2") return ScoreFunction::kS2;
  if (text == "s3" || text == "S3") return ScoreFunction::kS3;
  if (text == "s4" || text == "S4") return ScoreFunction::kS4;
  return std::nullopt;
}

std::string_view ToString(ScoreFunction fn) {
  switch (fn) {
    case ScoreFunction::kS1:
      return "s1";
    case ScoreFunction::kS2:
      return "s2";
    case ScoreFunction::kS3:
      return "s3";
    case ScoreFunction::kS4:
      return "s4";
  }
  return "s1";
}

GuessGrid SampleGuesses(const osmag::AreaGraph& map, const Vec2& prior,
                        const GridParams& params) {
  if (!(params.step > 0.) || !(params.angular_step > 0.) ||
      !(params.radius >= 0.)) {
    throw Error(ErrorCode::kInvalidArgument,
                "guess grid needs step > 0, angular_step > 0 and radius >= 0");
  }
  GuessGrid grid;
  grid.center = prior;
  grid.params = params;
  grid.orientations =
      static_cast<int>(std::ceil(2. * M_PI / params.angular_step - 1e-9));

  const int half = static_cast<int>(std::floor(params.radius / params.step + 1e-9));
  const double radius_sq = params.radius * params.radius + 1e-9;
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) {
      const Vec2 offset(i * params.step, j * params.step);
      if (offset.squaredNorm() > radius_sq) continue;
      ++grid.lattice_positions;
      const Vec2 position = prior + offset;
      const auto area = map.LocateArea(position);
      if (!area) continue;
      for (int k = 0; k < grid.orientations; ++k) {
        grid.guesses.push_back(
            {Pose2D(position.x(), position.y(), k * params.angular_step), *area});
      }
    }
  }
  if (grid.guesses.empty()) {
    throw Error(ErrorCode::kPriorOutOfMap,
                fmt::format("no area within {} m of prior ({}, {})",
                            params.radius, prior.x(), prior.y()));
  }
  return grid;
}

void AccumulateHit(double sd, const ErrorParams& params, ErrorSums* sums) {
  const double magnitude = std::abs(sd);
  sums->e1 += magnitude < params.nearby_threshold ? magnitude
                                                  : params.outlier_penalty;
  if (sd > 0.) {
    sums->e2 += geometry::Weight(sd);
    sums->e3 += sd;
  }
}

void AccumulateMiss(const ErrorParams& params, ErrorSums* sums) {
  sums->e1 += params.outlier_penalty;
}

double Score(ScoreFunction fn, const ErrorSums& sums) {
  switch (fn) {
    case ScoreFunction::kS1:
      return Reciprocal(sums.e1);
    case ScoreFunction::kS2:
      return sums.e2;
    case ScoreFunction::kS3:
      return sums.e1 == 0. ? kInfinity : sums.e2 / sums.e1;
    case ScoreFunction::kS4:
      return Reciprocal(sums.e3);
  }
  return 0.;
}

bool RanksBefore(const ScoredGuess& a, const ScoredGuess& b) {
  if (a.score != b.score) return a.score > b.score;
  return LexicographicLess(a.pose, b.pose);
}

ErrorSums EvaluateErrors(const geometry::RayCaster& caster, const Guess& guess,
                         const scan::ClutterFreePointSet& points,
                         const ErrorParams& errors,
                         const geometry::CastOptions& cast) {
  const geometry::BatchResult batch =
      caster.BatchIntersect(guess.area, guess.pose, points, cast);
  ErrorSums sums;
  for (const auto& hit : batch.hits) AccumulateHit(hit.sd, errors, &sums);
  for (size_t i = 0; i < batch.missed.size(); ++i) AccumulateMiss(errors, &sums);
  return sums;
}

ScoredGuess ScoreGuess(const geometry::RayCaster& caster, const Guess& guess,
                       const scan::ClutterFreePointSet& points,
                       ScoreFunction fn, const GlobalParams& params) {
  return MakeScored(guess,
                    EvaluateErrors(caster, guess, points, params.errors,
                                   params.cast),
                    fn);
}

GlobalResult GlobalLocalize(const geometry::RayCaster& caster, const Vec2& prior,
                            const scan::ClutterFreePointSet& points,
                            const GlobalParams& params) {
  const GuessGrid grid = SampleGuesses(caster.map(), prior, params.grid);
  return Rank(grid, EvaluateGrid(caster, grid, points, params),
              params.score_function, params.top_k);
}

std::array<GlobalResult, 4> GlobalLocalizeAll(
    const geometry::RayCaster& caster, const Vec2& prior,
    const scan::ClutterFreePointSet& points, const GlobalParams& params) {
  const GuessGrid grid = SampleGuesses(caster.map(), prior, params.grid);
  const std::vector<ErrorSums> sums = EvaluateGrid(caster, grid, points, params);
  std::array<GlobalResult, 4> results;
  for (size_t i = 0; i < kAllScoreFunctions.size(); ++i) {
    results[i] = Rank(grid, sums, kAllScoreFunctions[i], params.top_k);
  }
  return results;
}

std::string FormatScoreReport(const std::vector<ScoredGuess>& guesses) {
  std::string out = "# x y theta_deg area_id E1 E2 E3 score\n";
  for (const ScoredGuess& g : guesses) {
    out += fmt::format("{:.3f} {:.3f} {:.2f} {} {:.6f} {:.6f} {:.6f} {:.9g}\n",
                       g.pose.x, g.pose.y, g.pose.theta * 180. / M_PI, g.area,
                       g.e1, g.e2, g.e3, g.score);
  }
  return out;
}

}  // namespace global
}  // namespace areagraph
