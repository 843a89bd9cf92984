// Copyright 2026 The lpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lpa/generators.hpp"
#include "lpa/graph.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGraphFormat = "lpa-graph/1";
inline constexpr const char* kReportFormat = "lpa-report/1";

/// FNV-1a of the canonical bytes; identifies inputs inside reports.
inline std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

inline void reject_unknown_fields(const Json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) throw StructuralError("unknown field '" + it.key() + "' in " + where);
  }
}

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw StructuralError("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

inline std::string require_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string()) throw StructuralError("field '" + std::string(key) + "' in " + where + " must be a string");
  return v.get<std::string>();
}

}  // namespace detail

/// Parses a graph document. Explicit documents list vertices and edges;
/// generator documents name a family and a default depth, which
/// `depth_override` replaces.
inline Graph parse_graph(const std::string& text, std::optional<int> depth_override = std::nullopt) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw StructuralError("document must be a JSON object");
  detail::reject_unknown_fields(doc, {"format", "vertices", "edges", "generator"}, "document");
  const Json& fmt = detail::require(doc, "format", "document");
  if (!fmt.is_string() || fmt.get<std::string>() != kGraphFormat)
    throw StructuralError("unsupported format; expected \"" + std::string(kGraphFormat) + "\"");

  if (doc.contains("generator")) {
    if (doc.contains("vertices") || doc.contains("edges"))
      throw StructuralError("generator documents must not list vertices or edges");
    const Json& gen = doc["generator"];
    if (!gen.is_object()) throw StructuralError("field 'generator' must be an object");
    detail::reject_unknown_fields(gen, {"family", "depth", "params"}, "generator");
    std::string fam = detail::require_string(gen, "family", "generator");
    const Json& dep = detail::require(gen, "depth", "generator");
    if (!dep.is_number_integer()) throw StructuralError("generator depth must be an integer");
    if (gen.contains("params")) {
      if (!gen["params"].is_object() || !gen["params"].empty())
        throw StructuralError("the shipped generator families take no params");
    }
    int depth = depth_override.value_or(dep.get<int>());
    return expand_generator(fam, depth);
  }

  const Json& vs = detail::require(doc, "vertices", "document");
  const Json& es = detail::require(doc, "edges", "document");
  if (!vs.is_array()) throw StructuralError("field 'vertices' must be an array");
  if (!es.is_array()) throw StructuralError("field 'edges' must be an array");
  std::vector<std::string> vertex_ids;
  for (const Json& v : vs) {
    if (!v.is_string()) throw StructuralError("vertex ids must be strings");
    vertex_ids.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 3>> edges;
  for (const Json& e : es) {
    if (!e.is_object()) throw StructuralError("edges must be objects");
    detail::reject_unknown_fields(e, {"id", "source", "range"}, "edge");
    edges.push_back({detail::require_string(e, "id", "edge"),
                     detail::require_string(e, "source", "edge"),
                     detail::require_string(e, "range", "edge")});
  }
  return Graph::build(std::move(vertex_ids), edges);
}

/// Canonical serialization: fixed field order, two-space indent, trailing
/// newline. parse followed by serialize is the identity on canonical
/// documents.
inline std::string serialize_graph(const Graph& g) {
  Json doc;
  doc["format"] = kGraphFormat;
  if (g.generator()) {
    doc["generator"] = Json{{"family", g.generator()->family}, {"depth", g.generator()->depth}};
  } else {
    Json vs = Json::array();
    for (const auto& id : g.vertex_ids()) vs.push_back(id);
    doc["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const Edge& e : g.edges())
      es.push_back(Json{{"id", e.id}, {"source", g.vertex_id(e.source)}, {"range", g.vertex_id(e.range)}});
    doc["edges"] = std::move(es);
  }
  return doc.dump(2) + "\n";
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// DOT export; provenance notes (quotient of ..., ideal graph of ...) go
/// into leading comments.
inline std::string export_dot(const Graph& g, const std::vector<std::string>& notes = {}) {
  std::string out;
  for (const auto& n : notes) out += "// " + n + "\n";
  out += "digraph E {\n";
  for (const auto& id : g.vertex_ids()) out += "  \"" + dot_escape(id) + "\";\n";
  for (const Edge& e : g.edges())
    out += "  \"" + dot_escape(g.vertex_id(e.source)) + "\" -> \"" + dot_escape(g.vertex_id(e.range)) +
           "\" [label=\"" + dot_escape(e.id) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace lpa
