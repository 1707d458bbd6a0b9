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

#ifndef AREAGRAPH_TRACKING_ICP_H_
#define AREAGRAPH_TRACKING_ICP_H_

#include <optional>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "areagraph/common/pose2d.h"
#include "areagraph/geometry/ray_caster.h"
#include "areagraph/scan/organized_scan.h"

namespace areagraph {
namespace tracking {

enum class IcpSolver {
  // Weighted 2D Procrustes on (scan point, closest map point) pairs.
  kClosedForm,
  // Gauss-Newton on signed distances to the matched segments' lines, with
  // small-angle linearization.
  kPointToLine,
};

std::optional<IcpSolver> ParseIcpSolver(std::string_view text);
std::string_view ToString(IcpSolver solver);

struct IcpParams {
  int max_iterations = 30;
  double trans_eps = 1e-4;
  double rot_eps = 1e-4;
  bool use_weight = true;
  bool use_corridorness = true;
  geometry::PassageMode passage_mode = geometry::PassageMode::kAdaptive;
  double passage_threshold = geometry::kPassageThreshold;
  IcpSolver solver = IcpSolver::kClosedForm;
  // Divergence when, at the last iteration, fewer than this fraction of the
  // unoccluded matched points (sd > -1) lie within the weight band (sd < 3).
  // Zero disables the check.
  double min_support = 0.75;
  bool record_trace = false;
};

// One solve with correspondences held fixed.
struct IcpStep {
  double residual_before = 0.;  // Frozen-correspondence objective.
  double residual_after = 0.;
  Eigen::Matrix2d rotation = Eigen::Matrix2d::Identity();  // Applied update.
  Vec2 translation = Vec2::Zero();
  double step_scale = 1.;  // 1 unless the step was shortened.
  int points_used = 0;
  double support = 0.;
};

struct IcpResult {
  Pose2D pose;
  osmag::AreaId area = 0;
  int iterations = 0;
  bool converged = false;  // Met the eps criteria before max_iterations.
  double residual = 0.;    // Weighted sum of squared sd at the final pose.
  int matched = 0;
  double support = 0.;  // See IcpParams::min_support; last iteration.
  double corridorness = 0.;
  std::vector<IcpStep> trace;  // Filled when params.record_trace.
};

// Registers the clutter-free points against the map starting from 'initial',
// which must lie in a loaded area. Throws DivergenceError when every weight
// is zero, the pose leaves the map, or the final support is below
// min_support.
IcpResult RegisterIcp(const geometry::RayCaster& caster, const Pose2D& initial,
                      const scan::ClutterFreePointSet& points,
                      const IcpParams& params);

}  // namespace tracking
}  // namespace areagraph

#endif  // AREAGRAPH_TRACKING_ICP_H_
