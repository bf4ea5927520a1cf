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

#include <doctest.h>

#include "hrg/a2.hpp"
#include "hrg/constructions.hpp"
#include "hrg/pipeline.hpp"
#include "hrg/reports.hpp"

using namespace hrg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("group descriptions round trip") {
  std::vector<Json> groups{
      {{"kind", "free"}, {"rank", 3}},
      {{"kind", "abelian"}, {"rank", 1}, {"torsion", {2, 4}}},
      {{"kind", "finite"}, {"table", {{0, 1}, {1, 0}}}},
      {{"kind", "product"}, {"left", {{"kind", "free"}, {"rank", 1}}}, {"right", {{"kind", "abelian"}, {"rank", 2}, {"torsion", Json::array()}}}},
  };
  for (const auto& j : groups) {
    CAPTURE(j.dump());
    auto g = group_from_json(j);
    CHECK(group_to_json(*g) == j);
  }
  auto cyc = group_from_json({{"kind", "cyclic"}, {"order", 4}});
  CHECK(cyc->elements().size() == 4);
  auto a2 = group_from_json({{"kind", "a2"}, {"preset", "A1"}});
  auto again = group_from_json(group_to_json(*a2));
  CHECK(again->format(again->multiply(again->parse("a0"), again->parse("a1"))) == "a3^-1");
  CHECK(code_of([] { group_from_json({{"kind", "mystery"}}); }) == ErrorCode::kMalformedInput);
  CHECK(code_of([] { group_from_json({{"rank", 2}}); }) == ErrorCode::kMalformedInput);
  CHECK(code_of([] { group_from_json({{"kind", "free"}, {"rank", "two"}}); }) == ErrorCode::kMalformedInput);
}

TEST_CASE("cocycle descriptions") {
  auto p = *catalog("swap-14").finite;
  Json j{{"group", {{"kind", "abelian"}, {"rank", 1}, {"torsion", Json::array()}}}, {"labels", Json::object()}};
  for (int a = 1; a <= 4; ++a) {
    j["labels"]["e" + std::to_string(a)] = "(" + std::to_string(a) + ")";
    j["labels"]["f" + std::to_string(a)] = "(" + std::to_string(a) + ")";
  }
  auto c = cocycle_from_json(p, j);
  auto back = cocycle_to_json(p, c);
  CHECK(back["group"] == j["group"]);
  CHECK(back["labels"].size() == j["labels"].size());
  for (const auto& [edge, label] : j["labels"].items()) CHECK(back["labels"][edge] == label);
  auto b2 = *catalog("B2").finite;
  auto free = free_cocycle(b2);
  CHECK(free.group().format(free.edge(b2.edge_index("f2"))) == "t2");

  Json bad = j;
  bad["labels"]["e1"] = "(5)";
  CHECK(code_of([&] { cocycle_from_json(p, bad); }) == ErrorCode::kNonFunctorialCocycle);
  CHECK(code_of([&] { cocycle_from_json(p, Json{{"labels", Json::object()}}); }) == ErrorCode::kMalformedInput);
}

TEST_CASE("analysis reports") {
  auto p = *catalog("pqr-7.1").finite;
  auto rep = embeddability_report(p, 10, Degree{2, 2});
  AnalysisExtras extras;
  extras.simply_connected = simply_connected_test(p, 10);
  extras.grading = grading_function(p);
  auto j = embeddability_to_json(p, rep, extras);
  CHECK(j["verdict"] == "NotEmbeds");
  CHECK(j["abelian_invariants"]["text"] == "Z^2");
  CHECK(j["proof"]["replay"] == "ok");
  CHECK(j["witness"].size() == 2);
  CHECK(j["grading"].is_null());
  CHECK(j["grading_witness"].is_string());
  CHECK(dump(j) == dump(embeddability_to_json(p, embeddability_report(p, 10, Degree{2, 2}), extras)));

  auto b = *catalog("B2").finite;
  auto jb = embeddability_to_json(b, embeddability_report(b, 10, Degree{2}), AnalysisExtras{});
  CHECK(jb["verdict"] == "Embeds");
  CHECK(jb["cocycle"]["source"] == "free");
}

TEST_CASE("pipelines") {
  SUBCASE("named inputs and windows") {
    Json spec = Json::parse(R"({"steps": [
      {"op": "catalog", "name": "B2", "as": "base"},
      {"op": "skew_product", "input": "base", "cocycle": "free", "radius": 2, "as": "cover"},
      {"op": "skew_quotient", "input": "cover"}
    ]})");
    auto r = run_pipeline(spec);
    CHECK_FALSE(r.partial);
    CHECK(find_isomorphism(r.graph, *catalog("B2").finite));
    CHECK(r.named.count("cover"));
    CHECK(r.named.at("cover").num_vertices() == 1 + 4 + 12);
  }
  SUBCASE("lazy catalog entries need a window") {
    auto r = run_pipeline(Json::parse(R"J([{"op": "catalog", "name": "omega-2", "seed": "(0,0)", "radius": 1}])J"));
    CHECK(r.partial);
    CHECK(r.graph.num_vertices() == 3);
    CHECK(code_of([] { run_pipeline(Json::parse(R"([{"op": "catalog", "name": "omega-2"}])")); }) ==
          ErrorCode::kMalformedInput);
  }
  SUBCASE("inline, products and colours") {
    Json spec{{"steps", Json::array()}};
    spec["steps"].push_back({{"op", "inline"}, {"graph", presentation_to_json(*catalog("B1").finite)}, {"as", "one"}});
    spec["steps"].push_back({{"op", "catalog"}, {"name", "B3"}, {"as", "three"}});
    spec["steps"].push_back({{"op", "cartesian_product"}, {"inputs", {"one", "three"}}});
    spec["steps"].push_back({{"op", "permute_colors"}, {"perm", {2, 1}}});
    auto r = run_pipeline(spec);
    auto m = adjacency_matrices(r.graph);
    CHECK(m[0] == Matrix{{3}});
    CHECK(m[1] == Matrix{{1}});
  }
  SUBCASE("constructions without inputs") {
    auto mono = run_pipeline(Json::parse(R"([{"op": "monoidal_2graph", "n1": 1, "n2": 2, "theta": [[2, 1], [1, 1]]}])"));
    CHECK(mono.graph.num_edges() == 3);
    auto yb = run_pipeline(Json::parse(R"([{"op": "yang_baxter", "k": 2, "n": 2, "r": [[0,0],[1,0],[0,1],[1,1]]}])"));
    CHECK(validate_presentation(yb.graph).pass);
    auto lt = run_pipeline(Json::parse(R"([{"op": "lambda_t", "preset": "A1"}])"));
    CHECK(lt.graph.num_vertices() == 42);
    auto crossed = run_pipeline(Json::parse(R"([{"op": "catalog", "name": "B2"},
      {"op": "crossed_product", "automorphisms": [{"edge": {"f1": "f2", "f2": "f1"}}]},
      {"op": "affine_pullback", "rows": [[1, 1]], "offset": [0, 0]}])"));
    CHECK(crossed.graph.rank() == 1);
    CHECK(adjacency_matrices(crossed.graph)[0] == Matrix{{2}});
    auto action = run_pipeline(Json::parse(R"([{"op": "catalog", "name": "B2"},
      {"op": "action_graph", "n": 1, "automorphisms": [{}]}, {"op": "restrict_colors", "colors": [2]}])"));
    CHECK(action.graph.num_edges() == 2);
  }
  SUBCASE("errors name the step") {
    auto bad = Json::parse(R"([{"op": "catalog", "name": "B2"}, {"op": "explode"}])");
    CHECK(code_of([&] { run_pipeline(bad); }) == ErrorCode::kUnknownName);
    CHECK(message_of([&] { run_pipeline(bad); }).rfind("step 1 (explode)", 0) == 0);
    auto missing = Json::parse(R"([{"op": "skew_quotient", "input": "ghost"}])");
    CHECK(message_of([&] { run_pipeline(missing); }).find("ghost") != std::string::npos);
    auto cocycle = Json::parse(R"J([{"op": "catalog", "name": "pqr-7.1"},
      {"op": "skew_product", "cocycle": {"group": {"kind": "abelian", "rank": 1}, "labels": {"d": "(1)"}}}])J");
    CHECK(code_of([&] { run_pipeline(cocycle); }) == ErrorCode::kNonFunctorialCocycle);
    CHECK(code_of([] { run_pipeline(Json::object()); }) == ErrorCode::kMalformedInput);
    CHECK(code_of([] { run_pipeline(Json::array()); }) == ErrorCode::kMalformedInput);
    CHECK(code_of([] { run_pipeline(Json::parse(R"([{"op": "load", "path": "/nonexistent.json"}])")); }) ==
          ErrorCode::kIo);
  }
}
