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

#include "hrg/pipeline.hpp"

#include <filesystem>
#include <set>

#include "hrg/a2.hpp"
#include "hrg/constructions.hpp"
#include "hrg/reports.hpp"

namespace hrg {

namespace {

struct Value {
  Presentation graph;
  bool partial = false;
};

const Json& need(const Json& step, const char* name) {
  if (!step.contains(name)) fail(ErrorCode::kMalformedInput, std::string("missing field '") + name + "'");
  return step.at(name);
}

template <typename T>
T get(const Json& step, const char* name) {
  try {
    return need(step, name).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::kMalformedInput, std::string("field '") + name + "' has the wrong type");
  }
}

std::vector<Automorphism> automorphisms(const Json& step) {
  std::vector<Automorphism> out;
  const Json& list = need(step, "automorphisms");
  if (!list.is_array()) fail(ErrorCode::kMalformedInput, "'automorphisms' must be an array");
  for (const auto& a : list) {
    Automorphism m;
    if (a.contains("vertex")) m.vertex = get<std::map<std::string, std::string>>(a, "vertex");
    if (a.contains("edge")) m.edge = get<std::map<std::string, std::string>>(a, "edge");
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::pair<int, int>> pairs(const Json& j, const char* what) {
  try {
    return j.get<std::vector<std::pair<int, int>>>();
  } catch (const Json::exception&) {
    fail(ErrorCode::kMalformedInput, std::string("'") + what + "' must be a list of pairs");
  }
}

Value finish(Presentation p, bool partial) {
  auto rep = validate_presentation(p, partial ? ValidationMode::kPartial : ValidationMode::kFull);
  if (!rep.pass) fail(ErrorCode::kMalformedInput, "result is not a k-graph: " + rep.failure + " " + rep.detail);
  return Value{std::move(p), partial};
}

Value run_step(const Json& step, const std::string& op, const std::map<std::string, Value>& named,
               const Value* previous, const std::string& base_dir) {
  auto input = [&](const std::string& name) -> const Value& {
    auto it = named.find(name);
    if (it == named.end()) fail(ErrorCode::kUnknownName, "no earlier result named '" + name + "'");
    return it->second;
  };
  auto single = [&]() -> const Value& {
    if (step.contains("input")) return input(get<std::string>(step, "input"));
    if (!previous) fail(ErrorCode::kMalformedInput, "step has no input");
    return *previous;
  };

  if (op == "catalog") {
    auto entry = catalog(get<std::string>(step, "name"));
    if (entry.finite) return finish(*entry.finite, false);
    auto seed = get<std::string>(step, "seed");
    int radius = get<int>(step, "radius");
    if (!entry.lazy->has_vertex(seed)) fail(ErrorCode::kUnknownVertex, "seed '" + seed + "' is not a vertex");
    return finish(window(*entry.lazy, {seed}, radius), true);
  }
  if (op == "load") {
    auto path = std::filesystem::path(base_dir) / get<std::string>(step, "path");
    return finish(presentation_from_string(read_file(path.string())), false);
  }
  if (op == "inline") return finish(presentation_from_json(need(step, "graph")), false);
  if (op == "cartesian_product") {
    auto names = get<std::vector<std::string>>(step, "inputs");
    if (names.size() != 2) fail(ErrorCode::kMalformedInput, "cartesian_product takes two inputs");
    const Value& a = input(names[0]);
    const Value& b = input(names[1]);
    return finish(cartesian_product(a.graph, b.graph), a.partial || b.partial);
  }
  if (op == "affine_pullback") {
    const Value& in = single();
    std::vector<Degree> rows;
    for (auto& r : get<std::vector<std::vector<int>>>(step, "rows")) rows.emplace_back(std::move(r));
    Degree offset(get<std::vector<int>>(step, "offset"));
    return finish(affine_pullback(in.graph, rows, offset), in.partial);
  }
  if (op == "skew_product") {
    const Value& in = single();
    const Json& cj = need(step, "cocycle");
    Cocycle c;
    if (cj.is_string() && cj.get<std::string>() == "free") c = free_cocycle(in.graph);
    else if (cj.is_string() && cj.get<std::string>() == "degree") c = degree_cocycle(in.graph);
    else if (cj.is_object()) c = cocycle_from_json(in.graph, cj);
    else fail(ErrorCode::kMalformedInput, "cocycle must be \"free\", \"degree\" or an object");
    GroupElem seed = step.contains("seed") ? c.group().parse(get<std::string>(step, "seed")) : c.group().identity();
    int radius = step.contains("radius") ? get<int>(step, "radius") : 0;
    if (radius < 0) fail(ErrorCode::kMalformedInput, "radius must be nonnegative");
    return finish(skew_product(in.graph, c, seed, radius), in.partial || !c.group().finite());
  }
  if (op == "skew_quotient") {
    const Value& in = single();
    return finish(skew_quotient(in.graph), false);
  }
  if (op == "crossed_product") {
    const Value& in = single();
    return finish(crossed_product(in.graph, automorphisms(step)), in.partial);
  }
  if (op == "action_graph") {
    const Value& in = single();
    return finish(action_graph(get<int>(step, "n"), in.graph, automorphisms(step)), in.partial);
  }
  if (op == "monoidal_2graph") {
    std::vector<std::pair<int, int>> theta;
    if (step.contains("theta_file")) {
      auto path = std::filesystem::path(base_dir) / get<std::string>(step, "theta_file");
      Json j;
      try {
        j = Json::parse(read_file(path.string()));
      } catch (const Json::exception& e) {
        fail(ErrorCode::kMalformedInput, std::string("theta file: ") + e.what());
      }
      theta = pairs(j.is_object() ? need(j, "theta") : j, "theta");
    } else {
      theta = pairs(need(step, "theta"), "theta");
    }
    return finish(monoidal_2graph(get<int>(step, "n1"), get<int>(step, "n2"), theta), false);
  }
  if (op == "yang_baxter") {
    YangBaxterMap r;
    if (step.contains("sigma")) {
      r = YangBaxterMap::permutation_type(get<std::vector<int>>(step, "sigma"));
    } else {
      r.n = get<int>(step, "n");
      r.r = pairs(need(step, "r"), "r");
    }
    return finish(yang_baxter_graph(get<int>(step, "k"), r), false);
  }
  if (op == "permute_colors") {
    const Value& in = single();
    return finish(permute_colors(in.graph, get<std::vector<int>>(step, "perm")), in.partial);
  }
  if (op == "restrict_colors") {
    const Value& in = single();
    return finish(restrict_colors(in.graph, get<std::vector<int>>(step, "colors")), in.partial);
  }
  if (op == "lambda_t") {
    Json g = step.contains("triella") ? need(step, "triella") : Json{{"preset", get<std::string>(step, "preset")}};
    g["kind"] = "a2";
    auto group = std::dynamic_pointer_cast<const A2Group>(group_from_json(g));
    return finish(lambda_t(group->ops()).graph, false);
  }
  fail(ErrorCode::kUnknownName, "unknown construction '" + op + "'");
}

}  // namespace

PipelineResult run_pipeline(const Json& spec, const std::string& base_dir) {
  const Json* steps = &spec;
  if (spec.is_object()) {
    if (!spec.contains("steps")) fail(ErrorCode::kMalformedInput, "pipeline needs 'steps'");
    steps = &spec.at("steps");
  }
  if (!steps->is_array() || steps->empty()) fail(ErrorCode::kMalformedInput, "'steps' must be a nonempty array");

  std::map<std::string, Value> named;
  const Value* previous = nullptr;
  for (std::size_t i = 0; i < steps->size(); ++i) {
    const Json& step = (*steps)[i];
    std::string op = "?";
    std::string as = "step" + std::to_string(i);
    try {
      if (!step.is_object()) fail(ErrorCode::kMalformedInput, "step must be an object");
      op = get<std::string>(step, "op");
      if (step.contains("as")) as = get<std::string>(step, "as");
      Value v = run_step(step, op, named, previous, base_dir);
      named.insert_or_assign(as, std::move(v));
      previous = &named.at(as);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + " (" + op + "): " + e.message());
    }
  }
  PipelineResult out;
  out.graph = previous->graph;
  out.partial = previous->partial;
  for (auto& [name, v] : named) out.named.emplace(name, v.graph);
  return out;
}

}  // namespace hrg
