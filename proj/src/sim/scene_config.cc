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

#include "areagraph/sim/scene_config.h"

#include <filesystem>
#include <sstream>

#include "areagraph/common/error.h"
#include "areagraph/common/trajectory.h"
#include "areagraph/sim/scenes.h"
#include "areagraph/sim/trajectory_generator.h"
#include "boost/property_tree/ini_parser.hpp"
#include "boost/property_tree/ptree.hpp"
#include "fmt/format.h"

namespace areagraph {
namespace sim {
namespace {

namespace pt = boost::property_tree;

template <typename T>
void Read(const pt::ptree& tree, const std::string& key, T* value) {
  const auto text = tree.get_optional<std::string>(key);
  if (!text) return;
  std::istringstream in(*text);
  T parsed{};
  if (!(in >> parsed) || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("config key '{}': cannot read '{}'", key, *text));
  }
  *value = parsed;
}

}  // namespace

std::vector<Vec2> ParseWaypoints(std::string_view text) {
  std::vector<Vec2> points;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(item);
    double x = 0.;
    double y = 0.;
    char comma = 0;
    if (!(fields >> x >> comma >> y) || comma != ',' || !(fields >> std::ws).eof()) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("bad waypoint '{}', expected 'x,y'", item));
    }
    points.emplace_back(x, y);
  }
  return points;
}

SceneConfig ParseSceneConfig(std::string_view text, const std::string& base_dir) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(static_cast<int>(e.line()), e.message());
  }

  SceneConfig config;
  if (const auto map = tree.get_optional<std::string>("scene.map")) {
    const std::filesystem::path path(*map);
    config.map_path =
        path.is_absolute() ? path.string() : (std::filesystem::path(base_dir) / path).string();
  }
  config.builtin = tree.get<std::string>("scene.builtin", "");
  if (config.map_path.empty() == config.builtin.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "scene needs exactly one of 'map' and 'builtin'");
  }
  Read(tree, "scene.level", &config.level);
  Read(tree, "scene.wall_height", &config.wall_height);
  Read(tree, "scene.seed", &config.seed);

  Read(tree, "clutter.density", &config.clutter.density);
  Read(tree, "clutter.path_clearance", &config.clutter.path_clearance);
  Read(tree, "clutter.min_height", &config.clutter.min_height);
  Read(tree, "clutter.max_height", &config.clutter.max_height);

  SensorModel& s = config.sensor;
  Read(tree, "sensor.rings", &s.rings);
  Read(tree, "sensor.columns", &s.columns);
  Read(tree, "sensor.vfov_deg", &s.vfov_deg);
  Read(tree, "sensor.max_range", &s.max_range);
  Read(tree, "sensor.range_noise_sigma", &s.range_noise_sigma);
  Read(tree, "sensor.reflection_prob", &s.reflection_prob);
  Read(tree, "sensor.reflection_extra_range", &s.reflection_extra_range);
  Read(tree, "sensor.mount_height", &s.mount_height);
  s.Validate();
  if (!(config.wall_height > s.mount_height)) {
    throw Error(ErrorCode::kInvalidArgument, "wall_height must exceed the sensor height");
  }

  if (const auto doors = tree.get_child_optional("doors")) {
    for (const auto& [key, value] : *doors) {
      osmag::PassageId id = 0;
      std::istringstream key_in(key);
      if (!(key_in >> id) || !(key_in >> std::ws).eof()) {
        throw Error(ErrorCode::kInvalidArgument,
                    fmt::format("door key '{}' is not a passage id", key));
      }
      const std::string state = value.get_value<std::string>();
      if (state == "open") {
        config.doors[id] = DoorState::kOpen;
      } else if (state == "closed") {
        config.doors[id] = DoorState::kClosed;
      } else {
        throw Error(ErrorCode::kInvalidArgument,
                    fmt::format("door {}: expected open or closed, got '{}'", key, state));
      }
    }
  }

  if (const auto waypoints = tree.get_optional<std::string>("trajectory.waypoints")) {
    config.waypoints = ParseWaypoints(*waypoints);
  }
  Read(tree, "trajectory.speed", &config.speed);
  Read(tree, "trajectory.frame_rate", &config.frame_rate);
  Read(tree, "trajectory.corner_radius", &config.corner_radius);
  return config;
}

SceneConfig LoadSceneConfig(const std::string& path) {
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return ParseSceneConfig(ReadTextFile(path), dir.empty() ? "." : dir);
}

osmag::OsmDocument LoadSceneMap(const SceneConfig& config) {
  if (!config.builtin.empty()) {
    auto doc = BuiltinMap(config.builtin);
    if (!doc) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("unknown built-in map '{}'", config.builtin));
    }
    return *doc;
  }
  return osmag::ReadOsmFile(config.map_path);
}

SceneInstance InstantiateScene(const SceneConfig& config) {
  SceneInstance instance;
  instance.map = std::make_unique<osmag::AreaGraph>(
      osmag::LoadFloor(LoadSceneMap(config), config.level));
  if (!config.waypoints.empty()) {
    instance.path = RoundCorners(config.waypoints, config.corner_radius);
    instance.trajectory = GenerateTrajectory(instance.path, config.speed,
                                             config.frame_rate, instance.map.get());
  }
  ClutterParams clutter = config.clutter;
  if (!instance.path.empty()) clutter.keep_out.push_back(instance.path);
  instance.scene.map = instance.map.get();
  instance.scene.wall_height = config.wall_height;
  instance.scene.door_states = config.doors;
  instance.scene.seed = config.seed;
  instance.scene.clutter = GenerateClutter(*instance.map, clutter, config.seed);
  return instance;
}

}  // namespace sim
}  // namespace areagraph
