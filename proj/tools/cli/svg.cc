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

#include "tools/cli/svg.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fmt/format.h"

namespace areagraph {
namespace cli {
namespace {

constexpr double kPixelsPerMeter = 20.;
constexpr double kMargin = 1.;  // m
constexpr double kRedError = 0.5;  // m

struct Frame {
  Vec2 min;
  Vec2 max;
  double X(double x) const { return (x - min.x() + kMargin) * kPixelsPerMeter; }
  double Y(double y) const { return (max.y() - y + kMargin) * kPixelsPerMeter; }
};

std::string ErrorColor(double error, bool converged) {
  if (std::isnan(error)) return converged ? "#1f77b4" : "#000000";
  const double t = std::clamp(error / kRedError, 0., 1.);
  return fmt::format("#{:02x}{:02x}00", static_cast<int>(std::lround(220. * t)),
                     static_cast<int>(std::lround(170. * (1. - t))));
}

std::string_view AreaFill(osmag::AreaType type) {
  switch (type) {
    case osmag::AreaType::kCorridor:
      return "#f1ede4";
    case osmag::AreaType::kStructure:
      return "#dddddd";
    case osmag::AreaType::kRoom:
      break;
  }
  return "#fbfaf7";
}

std::string EscapeAttribute(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<double> RowErrors(const std::vector<TrajectoryRow>& estimate,
                              const std::vector<TrajectoryRow>& truth, double max_dt) {
  std::vector<double> errors;
  errors.reserve(estimate.size());
  for (const TrajectoryRow& row : estimate) {
    const TrajectoryRow* nearest = nullptr;
    for (const TrajectoryRow& candidate : truth) {
      if (nearest == nullptr || std::abs(candidate.timestamp - row.timestamp) <
                                    std::abs(nearest->timestamp - row.timestamp)) {
        nearest = &candidate;
      }
    }
    if (nearest == nullptr || std::abs(nearest->timestamp - row.timestamp) > max_dt) {
      errors.push_back(std::numeric_limits<double>::quiet_NaN());
    } else {
      errors.push_back((nearest->pose.translation() - row.pose.translation()).norm());
    }
  }
  return errors;
}

std::string RenderSvg(const osmag::AreaGraph& map,
                      const std::vector<SvgTrajectory>& trajectories) {
  Frame frame{map.areas().front().polygon.front(), map.areas().front().polygon.front()};
  for (const osmag::Area& area : map.areas()) {
    for (const Vec2& v : area.polygon) {
      frame.min = frame.min.cwiseMin(v);
      frame.max = frame.max.cwiseMax(v);
    }
  }
  for (const SvgTrajectory& trajectory : trajectories) {
    for (const TrajectoryRow& row : trajectory.rows) {
      frame.min = frame.min.cwiseMin(row.pose.translation());
      frame.max = frame.max.cwiseMax(row.pose.translation());
    }
  }
  const Vec2 size = (frame.max - frame.min).array() + 2. * kMargin;

  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      std::ceil(size.x() * kPixelsPerMeter), std::ceil(size.y() * kPixelsPerMeter));

  svg += "<g id=\"areas\" stroke=\"#333333\" stroke-width=\"2\">\n";
  for (const osmag::Area& area : map.areas()) {
    std::string d;
    for (size_t i = 0; i < area.polygon.size(); ++i) {
      d += fmt::format("{}{:.2f} {:.2f} ", i == 0 ? "M" : "L", frame.X(area.polygon[i].x()),
                       frame.Y(area.polygon[i].y()));
    }
    svg += fmt::format("<path class=\"area {}\" data-id=\"{}\" fill=\"{}\" d=\"{}Z\"/>\n",
                       osmag::ToString(area.type), area.id, AreaFill(area.type), d);
  }
  svg += "</g>\n<g id=\"passages\" stroke-width=\"4\">\n";
  for (const osmag::Passage& passage : map.passages()) {
    const bool glass = passage.kind == osmag::PassageKind::kTransparent;
    svg += fmt::format(
        "<line class=\"passage {}\" data-id=\"{}\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" "
        "y2=\"{:.2f}\" stroke=\"{}\"{}/>\n",
        osmag::ToString(passage.kind), passage.id, frame.X(passage.endpoints[0].x()),
        frame.Y(passage.endpoints[0].y()), frame.X(passage.endpoints[1].x()),
        frame.Y(passage.endpoints[1].y()), glass ? "#4cc9f0" : "#2a9d8f",
        glass ? " stroke-dasharray=\"6 4\"" : "");
  }
  svg += "</g>\n";

  for (const SvgTrajectory& trajectory : trajectories) {
    if (trajectory.rows.empty()) continue;
    svg += fmt::format("<g class=\"trajectory\" data-name=\"{}\">\n<polyline fill=\"none\" "
                       "stroke=\"#888888\" stroke-width=\"1\" points=\"",
                       EscapeAttribute(trajectory.name));
    for (size_t i = 0; i < trajectory.rows.size(); ++i) {
      const Vec2 p = trajectory.rows[i].pose.translation();
      svg += fmt::format("{}{:.2f},{:.2f}", i == 0 ? "" : " ", frame.X(p.x()), frame.Y(p.y()));
    }
    svg += "\"/>\n";
    for (size_t i = 0; i < trajectory.rows.size(); ++i) {
      const TrajectoryRow& row = trajectory.rows[i];
      const double error = i < trajectory.errors.size()
                               ? trajectory.errors[i]
                               : std::numeric_limits<double>::quiet_NaN();
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"{}\"/>\n",
                         frame.X(row.pose.x), frame.Y(row.pose.y),
                         ErrorColor(error, row.converged));
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cli
}  // namespace areagraph
