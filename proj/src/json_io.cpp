// Copyright 2026 The hrg Authors
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

#include "hrg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hrg {

namespace {

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    fail(ErrorCode::kMalformedInput, std::string("missing field '") + name + "'");
  return obj.at(name);
}

std::string str_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_string()) fail(ErrorCode::kMalformedInput, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
  const Json& k = field(j, "k");
  if (!k.is_number_integer()) fail(ErrorCode::kMalformedInput, "field 'k' must be an integer");
  std::vector<std::string> vertices;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) fail(ErrorCode::kMalformedInput, "'vertices' must be an array");
  for (const auto& v : vs) {
    if (!v.is_string()) fail(ErrorCode::kMalformedInput, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  const Json& es = field(j, "edges");
  if (!es.is_array()) fail(ErrorCode::kMalformedInput, "'edges' must be an array");
  for (const auto& e : es) {
    const Json& c = field(e, "color");
    if (!c.is_number_integer()) fail(ErrorCode::kMalformedInput, "edge color must be an integer");
    edges.push_back(Edge{str_field(e, "id"), c.get<int>(), str_field(e, "src"), str_field(e, "rng")});
  }
  std::vector<Square> squares;
  if (j.contains("squares")) {
    const Json& ss = j.at("squares");
    if (!ss.is_array()) fail(ErrorCode::kMalformedInput, "'squares' must be an array");
    for (const auto& s : ss)
      squares.push_back(Square{str_field(s, "i_edge"), str_field(s, "j_edge"), str_field(s, "j_prime"),
                               str_field(s, "i_prime")});
  }
  return Presentation(k.get<int>(), std::move(vertices), std::move(edges), std::move(squares));
}

Presentation presentation_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kMalformedInput, std::string("not valid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["k"] = p.rank();
  j["vertices"] = p.vertices();
  Json edges = Json::array();
  for (const Edge& e : p.edges())
    edges.push_back(Json{{"id", e.id}, {"color", e.color}, {"src", e.src}, {"rng", e.rng}});
  j["edges"] = std::move(edges);
  Json squares = Json::array();
  for (const Square& s : p.squares())
    squares.push_back(Json{{"i_edge", s.i_edge}, {"j_edge", s.j_edge}, {"j_prime", s.j_prime},
                           {"i_prime", s.i_prime}});
  j["squares"] = std::move(squares);
  return j;
}

std::string presentation_to_string(const Presentation& p) {
  return presentation_to_json(p).dump(2) + "\n";
}

std::string presentation_to_dot(const Presentation& p) {
  static const char* kColors[] = {"blue", "red", "darkgreen", "orange", "purple", "brown"};
  static const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};
  std::ostringstream out;
  out << "digraph kgraph {\n  rankdir=LR;\n";
  for (const auto& v : p.vertices()) out << "  " << Json(v).dump() << ";\n";
  // Arrows drawn source to range.
  for (const Edge& e : p.edges()) {
    std::size_t c = static_cast<std::size_t>(e.color - 1);
    out << "  " << Json(e.src).dump() << " -> " << Json(e.rng).dump() << " [label=" << Json(e.id).dump()
        << ", color=" << kColors[c % 6] << ", style=" << kStyles[(c / 6) % 4] << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (!r.pass) {
    j["failure"] = r.failure;
    j["witness"] = r.witness;
    j["detail"] = r.detail;
  }
  j["partial"] = r.partial;
  j["hexagon_vacuous"] = r.hexagon_vacuous;
  j["squares_checked"] = r.squares_checked;
  j["hexagons_checked"] = r.hexagons_checked;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << data;
  if (!out) fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace hrg
