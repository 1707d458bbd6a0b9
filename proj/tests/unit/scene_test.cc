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

#include "areagraph/sim/scene.h"

#include <algorithm>

#include "areagraph/common/error.h"
#include "areagraph/sim/scenes.h"
#include "gtest/gtest.h"

namespace areagraph {
namespace sim {
namespace {

double DistanceToLine(const Vec2& p, const std::vector<Vec2>& line) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    best = std::min(best, DistanceToSegment(p, line[i], line[i + 1]));
  }
  return best;
}

TEST(ClutterTest, ZeroDensityPlacesNothing) {
  const osmag::AreaGraph map = osmag::LoadFloor(OfficeMap(), 0);
  EXPECT_TRUE(GenerateClutter(map, {}, 1).empty());
}

TEST(ClutterTest, CountHeightsAndContainment) {
  const osmag::AreaGraph map = osmag::LoadFloor(SquareRoomMap(10.), 0);
  ClutterParams params;
  params.density = 0.1;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto objects = GenerateClutter(map, params, seed);
    ASSERT_EQ(10u, objects.size());
    for (const ClutterObject& object : objects) {
      EXPECT_GE(object.height, 0.5);
      EXPECT_LE(object.height, 1.5);
      EXPECT_EQ(map.areas()[0].id, object.container);
      for (const Vec2& v : object.Footprint()) {
        EXPECT_TRUE(PointInPolygon(v, map.areas()[0].polygon));
        EXPECT_GE(DistanceToBoundary(v, map.areas()[0].polygon), params.wall_clearance - 1e-12);
      }
    }
  }
}

TEST(ClutterTest, CountIsRoundedPerArea) {
  // Office rooms: 42, 48, 42, 48, 60, 60, 60 m^2 and a 75 m^2 corridor.
  const osmag::AreaGraph map = osmag::LoadFloor(OfficeMap(), 0);
  ClutterParams params;
  params.density = 0.1;
  EXPECT_EQ(4u + 5u + 4u + 5u + 6u + 6u + 6u + 8u, GenerateClutter(map, params, 3).size());
}

TEST(ClutterTest, SameSeedSameObjects) {
  const osmag::AreaGraph map = osmag::LoadFloor(OfficeMap(), 0);
  ClutterParams params;
  params.density = 0.2;
  EXPECT_EQ(GenerateClutter(map, params, 9), GenerateClutter(map, params, 9));
  EXPECT_NE(GenerateClutter(map, params, 9), GenerateClutter(map, params, 10));
}

TEST(ClutterTest, ObjectsDoNotEnterStructures) {
  const osmag::AreaGraph map = osmag::LoadFloor(OfficeMap(), 0);
  ClutterParams params;
  params.density = 0.1;
  for (const ClutterObject& object : GenerateClutter(map, params, 5)) {
    const osmag::Area* area = map.FindArea(object.container);
    ASSERT_NE(nullptr, area);
    EXPECT_NE(osmag::AreaType::kStructure, area->type);
    EXPECT_TRUE(PointInPolygon(object.center, area->polygon));
  }
}

TEST(ClutterTest, KeepOutIsRespected) {
  const osmag::AreaGraph map = osmag::LoadFloor(SquareRoomMap(10.), 0);
  ClutterParams params;
  params.density = 0.1;
  params.path_clearance = 1.;
  params.keep_out = {{Vec2(1., 5.), Vec2(9., 5.)}, {Vec2(5., 1.), Vec2(5., 9.)}};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const ClutterObject& object : GenerateClutter(map, params, seed)) {
      for (const auto& line : params.keep_out) {
        EXPECT_GE(DistanceToLine(object.center, line),
                  object.BoundingRadius() + params.path_clearance);
      }
    }
  }
}

TEST(ClutterTest, Errors) {
  const osmag::AreaGraph map = osmag::LoadFloor(SquareRoomMap(1.), 0);
  ClutterParams params;
  params.density = -0.1;
  try {
    GenerateClutter(map, params, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kInvalidArgument, e.code());
  }
  // One object that cannot fit into a 1 m room.
  params.density = 1.;
  params.min_box_side = params.max_box_side = 2.;
  params.min_radius = params.max_radius = 1.;
  params.max_attempts = 50;
  try {
    GenerateClutter(map, params, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kPlacement, e.code());
  }
}

TEST(ClutterObjectTest, Footprints) {
  ClutterObject box;
  box.center = Vec2(1., 2.);
  box.half_extents = Vec2(0.5, 0.25);
  box.yaw = M_PI / 2.;
  const Polygon footprint = box.Footprint();
  ASSERT_EQ(4u, footprint.size());
  EXPECT_NEAR(0.5, SignedArea(footprint), 1e-12);
  EXPECT_LT((footprint[0] - Vec2(1.25, 1.5)).norm(), 1e-12);
  EXPECT_NEAR(std::hypot(0.5, 0.25), box.BoundingRadius(), 1e-15);

  ClutterObject drum;
  drum.shape = ClutterObject::Shape::kCylinder;
  drum.radius = 0.4;
  const Polygon ring = drum.Footprint();
  EXPECT_EQ(16u, ring.size());
  EXPECT_GT(SignedArea(ring), 0.);
  for (const Vec2& v : ring) EXPECT_NEAR(0.4, v.norm(), 1e-12);
  EXPECT_EQ(0.4, drum.BoundingRadius());
}

TEST(SimSceneTest, DoorsDefaultToOpen) {
  SimScene scene;
  EXPECT_EQ(DoorState::kOpen, scene.door_state(5));
  scene.door_states[5] = DoorState::kClosed;
  EXPECT_EQ(DoorState::kClosed, scene.door_state(5));
  EXPECT_EQ(DoorState::kOpen, scene.door_state(6));
}

TEST(BuiltinMapsTest, AllLoad) {
  for (const char* name : {"square", "two_rooms", "room", "corridor", "plain_corridor", "office"}) {
    const auto doc = BuiltinMap(name);
    ASSERT_TRUE(doc.has_value()) << name;
    EXPECT_NO_THROW(osmag::LoadFloor(*doc, 0)) << name;
  }
  EXPECT_FALSE(BuiltinMap("castle").has_value());
  const osmag::AreaGraph office = osmag::LoadFloor(OfficeMap(), 0);
  EXPECT_EQ(8u, office.areas().size());
  EXPECT_EQ(10u, office.passages().size());
  const osmag::AreaGraph room = osmag::LoadFloor(ClutteredRoomMap(), 0);
  ASSERT_EQ(1u, room.areas().size());
  EXPECT_NEAR(104.5, SignedArea(room.areas()[0].polygon), 1e-6);
}

}  // namespace
}  // namespace sim
}  // namespace areagraph
