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

#include "areagraph/sim/scenes.h"

#include "areagraph/osmag/map_builder.h"

namespace areagraph {
namespace sim {
namespace {

using osmag::AreaId;
using osmag::AreaType;
using osmag::MapBuilder;
using osmag::PassageKind;

Polygon Box(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

}  // namespace

osmag::OsmDocument SquareRoomMap(double size) {
  MapBuilder builder;
  builder.AddArea(Box(0., 0., size, size), AreaType::kRoom, 0, std::nullopt, "room");
  return builder.Build();
}

osmag::OsmDocument TwoRoomMap(PassageKind kind) {
  MapBuilder builder;
  const AreaId left = builder.AddArea(Box(0., 0., 10., 10.), AreaType::kRoom, 0,
                                      std::nullopt, "left");
  const AreaId right = builder.AddArea(Box(10., 0., 15., 10.), AreaType::kRoom, 0,
                                       std::nullopt, "right");
  builder.AddPassage({10., 4.}, {10., 6.}, kind, left, right);
  return builder.Build();
}

osmag::OsmDocument ClutteredRoomMap() {
  MapBuilder builder;
  builder.AddArea({{0., 0.}, {12., 0.}, {12., 7.}, {9., 7.}, {9., 9.5}, {2., 9.5},
                   {2., 8.5}, {0., 8.5}},
                  AreaType::kRoom, 0, std::nullopt, "lab");
  return builder.Build();
}

osmag::OsmDocument CorridorMap(double length, double width, bool side_rooms) {
  MapBuilder builder;
  const AreaId corridor = builder.AddArea(Box(0., 0., length, width),
                                          AreaType::kCorridor, 0, std::nullopt,
                                          "corridor");
  if (side_rooms && length >= 30.) {
    const AreaId a = builder.AddArea(Box(4., width, 9., width + 5.),
                                     AreaType::kRoom, 0, std::nullopt, "a");
    builder.AddPassage({5., width}, {6., width}, PassageKind::kDoor, corridor, a);
    const AreaId b = builder.AddArea(Box(17., -5., 25., 0.), AreaType::kRoom, 0,
                                     std::nullopt, "b");
    builder.AddPassage({22.5, 0.}, {23.5, 0.}, PassageKind::kDoor, corridor, b);
    const AreaId c = builder.AddArea(Box(26., width, 30., width + 3.),
                                     AreaType::kRoom, 0, std::nullopt, "c");
    builder.AddPassage({26.5, width}, {27.5, width}, PassageKind::kDoor, corridor, c);
  }
  return builder.Build();
}

osmag::OsmDocument OfficeMap() {
  MapBuilder builder;
  const AreaId building = builder.AddArea(Box(0., -6., 30., 8.5),
                                          AreaType::kStructure, 0, std::nullopt,
                                          "building");
  const auto room = [&](double x0, double y0, double x1, double y1,
                        const std::string& name) {
    return builder.AddArea(Box(x0, y0, x1, y1), AreaType::kRoom, 0, building, name);
  };
  const AreaId corridor = builder.AddArea(Box(0., 0., 30., 2.5), AreaType::kCorridor,
                                          0, building, "corridor");
  const AreaId r1 = room(0., 2.5, 7., 8.5, "r1");
  const AreaId r2 = room(7., 2.5, 15., 8.5, "r2");
  const AreaId r3 = room(15., 2.5, 22., 8.5, "r3");
  const AreaId r4 = room(22., 2.5, 30., 8.5, "r4");
  const AreaId r5 = room(0., -6., 10., 0., "r5");
  const AreaId r6 = room(10., -6., 20., 0., "r6");
  const AreaId r7 = room(20., -6., 30., 0., "r7");

  const auto door = [&](Vec2 a, Vec2 b, AreaId from, AreaId to) {
    builder.AddPassage(a, b, PassageKind::kDoor, from, to);
  };
  door({3., 2.5}, {4., 2.5}, corridor, r1);
  door({10.5, 2.5}, {11.5, 2.5}, corridor, r2);
  door({19., 2.5}, {20., 2.5}, corridor, r3);
  door({24., 2.5}, {25., 2.5}, corridor, r4);
  door({6., 0.}, {7., 0.}, corridor, r5);
  door({17., 0.}, {18., 0.}, corridor, r6);
  door({27., 0.}, {28., 0.}, corridor, r7);
  door({7., 5.}, {7., 6.}, r1, r2);
  door({20., -4.}, {20., -3.}, r6, r7);
  builder.AddPassage({12., 0.}, {15.5, 0.}, PassageKind::kTransparent, corridor, r6);
  return builder.Build();
}

std::vector<Vec2> OfficeLoopWaypoints() {
  return {{12.5, 6.},   {11., 5.},    {11., 1.25},  {27.5, 1.25},
          {27.5, -3.5}, {17.5, -3.5}, {17.5, 1.25}, {11., 1.25},
          {11., 5.},    {12.5, 6.}};
}

std::optional<osmag::OsmDocument> BuiltinMap(std::string_view name) {
  if (name == "square") return SquareRoomMap();
  if (name == "two_rooms") return TwoRoomMap();
  if (name == "room") return ClutteredRoomMap();
  if (name == "corridor") return CorridorMap();
  if (name == "plain_corridor") return CorridorMap(30., 2.5, false);
  if (name == "office") return OfficeMap();
  return std::nullopt;
}

}  // namespace sim
}  // namespace areagraph
