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

#include "areagraph/tracking/icp.h"

#include <cmath>

#include "Eigen/Cholesky"
#include "areagraph/common/error.h"
#include "areagraph/geometry/weight.h"
#include "areagraph/tracking/corridorness.h"
#include "fmt/format.h"

namespace areagraph {
namespace tracking {
namespace {

// Halvings tried before giving up on a step that raises the residual.
constexpr int kMaxStepHalvings = 12;

struct Pair {
  Vec2 q;       // Scan point in the map frame at the current pose.
  Vec2 target;  // Closest point on the matched segment.
  Vec2 normal;  // Unit normal of the matched segment.
  double weight = 1.;
};

// Rigid update x -> rotation(angle) * x + translation, in the map frame.
struct Update {
  double angle = 0.;
  Vec2 translation = Vec2::Zero();
};

Eigen::Matrix2d Rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

double FrozenResidual(IcpSolver solver, const std::vector<Pair>& pairs,
                      const Update& update) {
  const Eigen::Matrix2d r = Rotation(update.angle);
  double sum = 0.;
  for (const Pair& pair : pairs) {
    const Vec2 moved = r * pair.q + update.translation;
    double e = 0.;
    if (solver == IcpSolver::kClosedForm) {
      e = (moved - pair.target).norm();
    } else {
      e = pair.normal.dot(moved - pair.target);
    }
    sum += pair.weight * e * e;
  }
  return sum;
}

Vec2 WeightedCentroid(const std::vector<Pair>& pairs, Vec2 Pair::*member) {
  Vec2 sum = Vec2::Zero();
  double total = 0.;
  for (const Pair& pair : pairs) {
    sum += pair.weight * (pair.*member);
    total += pair.weight;
  }
  return sum / total;
}

Update SolveClosedForm(const std::vector<Pair>& pairs) {
  const Vec2 q_mean = WeightedCentroid(pairs, &Pair::q);
  const Vec2 c_mean = WeightedCentroid(pairs, &Pair::target);
  double dot = 0.;
  double cross = 0.;
  for (const Pair& pair : pairs) {
    const Vec2 a = pair.q - q_mean;
    const Vec2 b = pair.target - c_mean;
    dot += pair.weight * a.dot(b);
    cross += pair.weight * Cross(a, b);
  }
  Update update;
  update.angle = std::atan2(cross, dot);
  update.translation = c_mean - Rotation(update.angle) * q_mean;
  return update;
}

Update SolvePointToLine(const std::vector<Pair>& pairs) {
  // Rotate about the centroid to keep the system well conditioned far from
  // the map origin.
  const Vec2 pivot = WeightedCentroid(pairs, &Pair::q);
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  for (const Pair& pair : pairs) {
    const Vec2 arm = pair.q - pivot;
    Eigen::Vector3d j;
    j << pair.normal.x(), pair.normal.y(), Cross(arm, pair.normal);
    const double r = pair.normal.dot(pair.q - pair.target);
    a += pair.weight * j * j.transpose();
    b += pair.weight * r * j;
  }
  a.diagonal().array() += 1e-9 * (a.trace() + 1.);
  const Eigen::Vector3d x = a.ldlt().solve(-b);
  if (!x.allFinite()) return {};
  Update update;
  update.angle = x.z();
  update.translation =
      pivot + x.head<2>() - Rotation(update.angle) * pivot;
  return update;
}

}  // namespace

std::optional<IcpSolver> ParseIcpSolver(std::string_view text) {
  if (text == "closed_form") return IcpSolver::kClosedForm;
  if (text == "point_to_line") return IcpSolver::kPointToLine;
  return std::nullopt;
}

std::string_view ToString(IcpSolver solver) {
  return solver == IcpSolver::kClosedForm ? "closed_form" : "point_to_line";
}

IcpResult RegisterIcp(const geometry::RayCaster& caster, const Pose2D& initial,
                      const scan::ClutterFreePointSet& points,
                      const IcpParams& params) {
  const osmag::AreaGraph& map = caster.map();
  const auto start_area = map.LocateArea(initial.translation());
  if (!start_area) {
    throw DivergenceError(fmt::format("initial pose ({}, {}) is outside the map",
                                      initial.x, initial.y));
  }
  IcpResult result;
  result.pose = initial;
  result.area = *start_area;

  const geometry::CastOptions cast{params.passage_mode, params.passage_threshold};
  geometry::BatchResult batch;
  std::vector<Pair> pairs;
  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    caster.BatchIntersect(result.area, result.pose, points, cast, &batch);
    result.matched = static_cast<int>(batch.hits.size());

    std::vector<int> selected;
    const auto corridorness = ComputeCorridorness(batch.hits);
    result.corridorness = corridorness ? corridorness->value : 0.;
    if (params.use_corridorness && corridorness) {
      selected = CorridorDownsample(batch.hits, corridorness->histogram,
                                    DownsampleRate(corridorness->value));
    } else {
      selected.resize(batch.hits.size());
      for (size_t i = 0; i < selected.size(); ++i) selected[i] = static_cast<int>(i);
    }

    pairs.clear();
    const Eigen::Matrix2d rotation = result.pose.rotation();
    const Vec2 origin = result.pose.translation();
    for (const int k : selected) {
      const geometry::IntersectionResult& hit = batch.hits[k];
      const double weight = params.use_weight ? geometry::Weight(hit.sd) : 1.;
      if (weight <= 0.) continue;
      const Vec2 direction = hit.segment_end - hit.segment_start;
      Pair pair;
      pair.q = origin + rotation * points.points[batch.point_index[k]];
      pair.target = hit.hit_point;
      pair.normal = Vec2(-direction.y(), direction.x()).normalized();
      pair.weight = weight;
      pairs.push_back(pair);
    }
    // Points short of the map are occluders and say nothing about the pose;
    // points far behind it do.
    int unoccluded = 0;
    int in_band = 0;
    for (const int k : selected) {
      const double sd = batch.hits[k].sd;
      if (sd <= -1.) continue;
      ++unoccluded;
      if (sd < 3.) ++in_band;
    }
    const double support =
        unoccluded == 0 ? 0. : static_cast<double>(in_band) / unoccluded;
    result.support = support;
    if (pairs.empty()) {
      throw DivergenceError(fmt::format("every weight is zero at ({:.3f}, {:.3f})",
                                        result.pose.x, result.pose.y));
    }

    const Update full = params.solver == IcpSolver::kClosedForm
                            ? SolveClosedForm(pairs)
                            : SolvePointToLine(pairs);
    IcpStep step;
    step.points_used = static_cast<int>(pairs.size());
    step.support = support;
    step.residual_before = FrozenResidual(params.solver, pairs, Update{});
    Update applied;
    step.residual_after = step.residual_before;
    step.step_scale = 0.;
    double scale = 1.;
    for (int halving = 0; halving <= kMaxStepHalvings; ++halving, scale *= 0.5) {
      const Update candidate{scale * full.angle, scale * full.translation};
      const double residual = FrozenResidual(params.solver, pairs, candidate);
      if (residual <= step.residual_before) {
        applied = candidate;
        step.residual_after = residual;
        step.step_scale = scale;
        break;
      }
    }
    step.rotation = Rotation(applied.angle);
    step.translation = applied.translation;

    const Vec2 new_origin = step.rotation * origin + applied.translation;
    const double moved = (new_origin - origin).norm();
    result.iterations = iteration;
    if (params.record_trace) result.trace.push_back(step);
    // A step below eps is not applied, so a converged pose is a fixed point.
    if (moved < params.trans_eps && std::abs(applied.angle) < params.rot_eps) {
      result.residual = step.residual_before;
      result.converged = true;
      break;
    }
    const Pose2D next(new_origin.x(), new_origin.y(),
                      result.pose.theta + applied.angle);
    result.pose = next;
    result.residual = step.residual_after;
    if (!map.Contains(result.area, next.translation())) {
      const auto area = map.LocateArea(next.translation());
      if (!area) {
        throw DivergenceError(fmt::format(
            "pose ({:.3f}, {:.3f}) left the map", next.x, next.y));
      }
      result.area = *area;
    }
  }
  if (result.support < params.min_support) {
    throw DivergenceError(fmt::format(
        "lost support at ({:.3f}, {:.3f}): {:.3f} of the unoccluded points lie "
        "near the map",
        result.pose.x, result.pose.y, result.support));
  }
  return result;
}

}  // namespace tracking
}  // namespace areagraph
