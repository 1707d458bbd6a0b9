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

#include "areagraph/osmag/osm_document.h"

#include <random>

#include "areagraph/common/error.h"
#include "areagraph/osmag/area_graph.h"
#include "gtest/gtest.h"

namespace areagraph {
namespace osmag {
namespace {

constexpr char kMinimalMap[] = R"(<?xml version="1.0"?>
<osm version="0.6">
  <node id="1" lat="31.0" lon="121.0"/>
  <node id="2" lat="31.0" lon="121.0001"/>
  <node id="3" lat="31.0001" lon="121.0001"/>
  <node id="4" lat="31.0001" lon="121.0"/>
  <way id="10">
    <nd ref="1"/><nd ref="2"/><nd ref="3"/><nd ref="4"/><nd ref="1"/>
    <tag k="osmAG:type" v="area"/>
  </way>
</osm>
)";

constexpr char kMapWithPassage[] = R"(<?xml version="1.0"?>
<osm version="0.6">
  <node id="1" lat="31.0" lon="121.0"/>
  <node id="2" lat="31.0" lon="121.0001"/>
  <node id="3" lat="31.0001" lon="121.0001"/>
  <node id="4" lat="31.0001" lon="121.0"/>
  <node id="5" lat="31.0" lon="121.00003"/>
  <node id="6" lat="31.0" lon="121.00006"/>
  <way id="10">
    <nd ref="1"/><nd ref="2"/><nd ref="3"/><nd ref="4"/><nd ref="1"/>
    <tag k="osmAG:type" v="area"/>
    <tag k="osmAG:areaType" v="room"/>
    <tag k="level" v="0"/>
    <tag k="colour" v="pink"/>
  </way>
  <way id="20">
    <nd ref="5"/><nd ref="6"/>
    <tag k="osmAG:type" v="passage"/>
  </way>
</osm>
)";

TEST(OsmDocumentTest, MinimalMapHasOneArea) {
  const OsmDocument doc = ParseOsm(kMinimalMap);
  EXPECT_EQ(4u, doc.nodes.size());
  ASSERT_EQ(1u, doc.ways.size());
  EXPECT_EQ(5u, doc.ways[0].node_refs.size());
  const AreaGraph map = LoadFloor(doc, 0);
  EXPECT_EQ(1u, map.areas().size());
  EXPECT_EQ(0u, map.passages().size());
  EXPECT_EQ(4u, map.areas()[0].polygon.size());
}

TEST(OsmDocumentTest, PassageOnSquareEdge) {
  const OsmDocument doc = ParseOsm(kMapWithPassage);
  const AreaGraph map = LoadFloor(doc, 0);
  ASSERT_EQ(1u, map.areas().size());
  ASSERT_EQ(1u, map.passages().size());
  const Passage& passage = map.passages()[0];
  EXPECT_EQ(20, passage.id);
  EXPECT_EQ(PassageKind::kDoor, passage.kind);
  EXPECT_EQ(10, passage.from);
  EXPECT_FALSE(passage.to.has_value());
}

TEST(OsmDocumentTest, UnknownTagsAreKept) {
  const OsmDocument doc = ParseOsm(kMapWithPassage);
  EXPECT_EQ("pink", FindTag(doc.ways[0].tags, "colour").value());
}

TEST(OsmDocumentTest, MalformedXmlReportsLine) {
  constexpr char kBroken[] =
      "<osm>\n"
      "  <node id=\"1\" lat=\"31\" lon=\"121\"/>\n"
      "  <way id=\"2\">\n"
      "</osm>\n";
  try {
    ParseOsm(kBroken);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(4, e.line());
  }
}

TEST(OsmDocumentTest, BadAttributeReportsLine) {
  constexpr char kBadLat[] =
      "<osm>\n"
      "  <node id=\"1\" lat=\"north\" lon=\"121\"/>\n"
      "</osm>\n";
  try {
    ParseOsm(kBadLat);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(2, e.line());
  }
}

TEST(OsmDocumentTest, DuplicateNodeIdIsRejected) {
  EXPECT_THROW(ParseOsm("<osm><node id='1' lat='0' lon='0'/>"
                        "<node id='1' lat='1' lon='1'/></osm>"),
               ParseError);
}

TEST(OsmDocumentTest, MissingNodeReferenceIsAReferenceError) {
  constexpr char kDangling[] = R"(<osm>
  <node id="1" lat="31.0" lon="121.0"/>
  <way id="2"><nd ref="1"/><nd ref="99"/></way>
</osm>)";
  try {
    ParseOsm(kDangling);
    FAIL() << "expected a reference error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kReference, e.code());
  }
}

TEST(OsmDocumentTest, WrongRootIsRejected) {
  EXPECT_THROW(ParseOsm("<gpx></gpx>"), ParseError);
  EXPECT_THROW(ParseOsm(""), ParseError);
}

OsmDocument RandomDocument(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lat(-89.9, 89.9);
  std::uniform_real_distribution<double> lon(-179.9, 179.9);
  std::uniform_int_distribution<int> count(0, 6);
  const std::string alphabet = "abz<>&\"' =:_019";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  const auto random_text = [&]() {
    std::string s;
    const int n = count(rng) + 1;
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    return s;
  };

  OsmDocument doc;
  const int nodes = count(rng) + 1;
  for (int i = 0; i < nodes; ++i) {
    RawNode node;
    node.id = i * 7 - 3;
    node.lat = lat(rng);
    node.lon = lon(rng);
    const int tags = count(rng) / 3;
    for (int t = 0; t < tags; ++t) node.tags.push_back({random_text(), random_text()});
    doc.nodes.push_back(node);
  }
  std::uniform_int_distribution<int> node_pick(0, nodes - 1);
  const int ways = count(rng);
  for (int i = 0; i < ways; ++i) {
    RawWay way;
    way.id = 1000 + i;
    const int refs = count(rng);
    for (int r = 0; r < refs; ++r) way.node_refs.push_back(doc.nodes[node_pick(rng)].id);
    const int tags = count(rng);
    for (int t = 0; t < tags; ++t) way.tags.push_back({random_text(), random_text()});
    doc.ways.push_back(way);
  }
  return doc;
}

TEST(OsmDocumentTest, SerializeParseRoundTrip) {
  std::mt19937_64 rng(20231101);
  for (int trial = 0; trial < 1000; ++trial) {
    const OsmDocument doc = RandomDocument(rng);
    const OsmDocument reparsed = ParseOsm(SerializeOsm(doc));
    ASSERT_TRUE(StructurallyEqual(doc, reparsed)) << "trial " << trial;
  }
}

TEST(OsmDocumentTest, RoundTripOfParsedFile) {
  const OsmDocument doc = ParseOsm(kMapWithPassage);
  EXPECT_TRUE(StructurallyEqual(doc, ParseOsm(SerializeOsm(doc))));
}

}  // namespace
}  // namespace osmag
}  // namespace areagraph
