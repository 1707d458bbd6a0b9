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

#include <charconv>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "areagraph/common/error.h"
#include "expat.h"
#include "fmt/format.h"

namespace areagraph {
namespace osmag {
namespace {

template <typename T>
std::optional<T> ParseNumber(std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

enum class Context { kNone, kNode, kWay };

struct ParserState {
  XML_Parser parser = nullptr;
  OsmDocument doc;
  Context context = Context::kNone;
  bool saw_root = false;
  std::unordered_set<OsmId> node_ids;
  std::unordered_set<OsmId> way_ids;
  // Set when a handler rejects the input; parsing is stopped right after.
  std::optional<ParseError> error;

  int Line() const {
    return static_cast<int>(XML_GetCurrentLineNumber(parser));
  }

  void Fail(const std::string& message) {
    if (!error) error.emplace(Line(), message);
    XML_StopParser(parser, XML_FALSE);
  }
};

const char* FindAttribute(const XML_Char** attributes, const char* name) {
  for (int i = 0; attributes[i] != nullptr; i += 2) {
    if (std::strcmp(attributes[i], name) == 0) return attributes[i + 1];
  }
  return nullptr;
}

template <typename T>
std::optional<T> RequireNumber(ParserState* state, const XML_Char** attributes,
                               const char* element, const char* name) {
  const char* raw = FindAttribute(attributes, name);
  if (raw == nullptr) {
    state->Fail(fmt::format("<{}> is missing attribute '{}'", element, name));
    return std::nullopt;
  }
  const auto value = ParseNumber<T>(raw);
  if (!value) {
    state->Fail(fmt::format("<{}> attribute '{}' is not a number: '{}'",
                            element, name, raw));
  }
  return value;
}

void HandleNode(ParserState* state, const XML_Char** attributes) {
  const auto id = RequireNumber<OsmId>(state, attributes, "node", "id");
  if (!id) return;
  const auto lat = RequireNumber<double>(state, attributes, "node", "lat");
  if (!lat) return;
  const auto lon = RequireNumber<double>(state, attributes, "node", "lon");
  if (!lon) return;
  if (*lat < -90. || *lat > 90. || *lon < -180. || *lon > 180.) {
    state->Fail(fmt::format("node {} has lat/lon out of range", *id));
    return;
  }
  if (!state->node_ids.insert(*id).second) {
    state->Fail(fmt::format("duplicate node id {}", *id));
    return;
  }
  state->doc.nodes.push_back(RawNode{*id, *lat, *lon, {}, state->Line()});
  state->context = Context::kNode;
}

void HandleWay(ParserState* state, const XML_Char** attributes) {
  const auto id = RequireNumber<OsmId>(state, attributes, "way", "id");
  if (!id) return;
  if (!state->way_ids.insert(*id).second) {
    state->Fail(fmt::format("duplicate way id {}", *id));
    return;
  }
  RawWay way;
  way.id = *id;
  way.line = state->Line();
  state->doc.ways.push_back(std::move(way));
  state->context = Context::kWay;
}

void HandleTag(ParserState* state, const XML_Char** attributes) {
  const char* key = FindAttribute(attributes, "k");
  const char* value = FindAttribute(attributes, "v");
  if (key == nullptr || value == nullptr) {
    state->Fail("<tag> needs both 'k' and 'v'");
    return;
  }
  if (state->context == Context::kNode) {
    state->doc.nodes.back().tags.push_back({key, value});
  } else if (state->context == Context::kWay) {
    state->doc.ways.back().tags.push_back({key, value});
  }
  // Tags outside nodes and ways (e.g. on relations) are not part of the
  // subset and are dropped.
}

void HandleNd(ParserState* state, const XML_Char** attributes) {
  if (state->context != Context::kWay) {
    state->Fail("<nd> outside of <way>");
    return;
  }
  const auto ref = RequireNumber<OsmId>(state, attributes, "nd", "ref");
  if (!ref) return;
  state->doc.ways.back().node_refs.push_back(*ref);
}

void XMLCALL StartElement(void* user_data, const XML_Char* name,
                          const XML_Char** attributes) {
  auto* state = static_cast<ParserState*>(user_data);
  if (!state->saw_root) {
    if (std::strcmp(name, "osm") != 0) {
      state->Fail(fmt::format("root element must be <osm>, got <{}>", name));
      return;
    }
    state->saw_root = true;
    return;
  }
  if (std::strcmp(name, "node") == 0) {
    HandleNode(state, attributes);
  } else if (std::strcmp(name, "way") == 0) {
    HandleWay(state, attributes);
  } else if (std::strcmp(name, "tag") == 0) {
    HandleTag(state, attributes);
  } else if (std::strcmp(name, "nd") == 0) {
    HandleNd(state, attributes);
  }
}

void XMLCALL EndElement(void* user_data, const XML_Char* name) {
  auto* state = static_cast<ParserState*>(user_data);
  if (std::strcmp(name, "node") == 0 || std::strcmp(name, "way") == 0) {
    state->context = Context::kNone;
  }
}

void AppendEscaped(std::string* out, std::string_view text) {
  for (const char c : text) {
    switch (c) {
      case '&':
        *out += "&amp;";
        break;
      case '<':
        *out += "&lt;";
        break;
      case '>':
        *out += "&gt;";
        break;
      case '"':
        *out += "&quot;";
        break;
      case '\'':
        *out += "&apos;";
        break;
      default:
        *out += c;
    }
  }
}

void AppendTags(std::string* out, const std::vector<Tag>& tags) {
  for (const Tag& tag : tags) {
    *out += "    <tag k=\"";
    AppendEscaped(out, tag.key);
    *out += "\" v=\"";
    AppendEscaped(out, tag.value);
    *out += "\"/>\n";
  }
}

}  // namespace

bool StructurallyEqual(const OsmDocument& a, const OsmDocument& b) {
  if (a.nodes.size() != b.nodes.size() || a.ways.size() != b.ways.size()) {
    return false;
  }
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    const RawNode& n = a.nodes[i];
    const RawNode& m = b.nodes[i];
    if (n.id != m.id || n.lat != m.lat || n.lon != m.lon || n.tags != m.tags) {
      return false;
    }
  }
  for (size_t i = 0; i < a.ways.size(); ++i) {
    const RawWay& v = a.ways[i];
    const RawWay& w = b.ways[i];
    if (v.id != w.id || v.node_refs != w.node_refs || v.tags != w.tags) {
      return false;
    }
  }
  return true;
}

std::optional<std::string_view> FindTag(const std::vector<Tag>& tags,
                                        std::string_view key) {
  for (const Tag& tag : tags) {
    if (tag.key == key) return std::string_view(tag.value);
  }
  return std::nullopt;
}

std::unordered_map<OsmId, size_t> BuildNodeIndex(const OsmDocument& doc) {
  std::unordered_map<OsmId, size_t> index;
  index.reserve(doc.nodes.size());
  for (size_t i = 0; i < doc.nodes.size(); ++i) index.emplace(doc.nodes[i].id, i);
  return index;
}

OsmDocument ParseOsm(std::string_view xml) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  ParserState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), &StartElement, &EndElement);

  const XML_Status status = XML_Parse(
      parser.get(), xml.data(), static_cast<int>(xml.size()), XML_TRUE);
  if (state.error) throw *state.error;
  if (status != XML_STATUS_OK) {
    throw ParseError(
        static_cast<int>(XML_GetCurrentLineNumber(parser.get())),
        XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!state.saw_root) throw ParseError(1, "empty document");

  for (const RawWay& way : state.doc.ways) {
    for (const OsmId ref : way.node_refs) {
      if (!state.node_ids.contains(ref)) {
        throw Error(ErrorCode::kReference,
                    fmt::format("line {}: way {} references missing node {}",
                                way.line, way.id, ref));
      }
    }
  }
  return std::move(state.doc);
}

OsmDocument ReadOsmFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open map file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseOsm(buffer.str());
}

std::string SerializeOsm(const OsmDocument& doc) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<osm version=\"0.6\" generator=\"areagraph\">\n";
  for (const RawNode& node : doc.nodes) {
    out += fmt::format("  <node id=\"{}\" lat=\"{}\" lon=\"{}\"", node.id,
                       node.lat, node.lon);
    if (node.tags.empty()) {
      out += "/>\n";
      continue;
    }
    out += ">\n";
    AppendTags(&out, node.tags);
    out += "  </node>\n";
  }
  for (const RawWay& way : doc.ways) {
    out += fmt::format("  <way id=\"{}\">\n", way.id);
    for (const OsmId ref : way.node_refs) {
      out += fmt::format("    <nd ref=\"{}\"/>\n", ref);
    }
    AppendTags(&out, way.tags);
    out += "  </way>\n";
  }
  out += "</osm>\n";
  return out;
}

void WriteOsmFile(const OsmDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write map file '" + path + "'");
  out << SerializeOsm(doc);
}

}  // namespace osmag
}  // namespace areagraph
