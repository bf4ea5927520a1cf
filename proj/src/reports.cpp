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

#include "hrg/reports.hpp"

#include "hrg/a2.hpp"

namespace hrg {

namespace {

int int_field(const Json& j, const char* name, int fallback) {
  if (!j.contains(name)) return fallback;
  if (!j.at(name).is_number_integer()) fail(ErrorCode::kMalformedInput, std::string("'") + name + "' must be an integer");
  return j.at(name).get<int>();
}

std::vector<std::string> edge_ids(const Presentation& p, const Morphism& m) {
  std::vector<std::string> out;
  for (int e : m.word) out.push_back(p.edge_name(e));
  return out;
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(ErrorCode::kMalformedInput, "group needs a 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "free") return std::make_shared<FreeGroup>(int_field(j, "rank", 1));
    if (kind == "cyclic") return FiniteGroup::cyclic(int_field(j, "order", 1));
    if (kind == "finite") return std::make_shared<FiniteGroup>(j.at("table").get<std::vector<std::vector<int>>>());
    if (kind == "abelian") {
      std::vector<int> torsion;
      if (j.contains("torsion")) torsion = j.at("torsion").get<std::vector<int>>();
      return std::make_shared<AbelianGroup>(int_field(j, "rank", 0), torsion);
    }
    if (kind == "product") return std::make_shared<ProductGroup>(group_from_json(j.at("left")), group_from_json(j.at("right")));
    if (kind == "a2") {
      if (j.contains("preset"))
        return std::make_shared<A2Group>(A2Ops(std::make_shared<Triella>(Triella::preset(j.at("preset").get<std::string>()))));
      ProjectivePlane plane;
      plane.q = j.at("q").get<int>();
      plane.lines = j.at("lines").get<std::vector<std::vector<int>>>();
      std::set<Triple> triples;
      for (const auto& t : j.at("triples")) triples.insert({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
      return std::make_shared<A2Group>(
          A2Ops(std::make_shared<Triella>(std::move(plane), j.at("lambda").get<std::vector<int>>(), std::move(triples))));
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::kMalformedInput, std::string("bad group description: ") + e.what());
  }
  fail(ErrorCode::kMalformedInput, "unknown group kind '" + kind + "'");
}

Json group_to_json(const Group& g) {
  Json j;
  j["kind"] = g.kind();
  if (auto f = dynamic_cast<const FreeGroup*>(&g)) {
    j["rank"] = f->rank();
  } else if (auto a = dynamic_cast<const AbelianGroup*>(&g)) {
    j["rank"] = a->rank();
    j["torsion"] = a->torsion();
  } else if (auto fg = dynamic_cast<const FiniteGroup*>(&g)) {
    j["table"] = fg->table();
  } else if (auto pg = dynamic_cast<const ProductGroup*>(&g)) {
    j["left"] = group_to_json(pg->left());
    j["right"] = group_to_json(pg->right());
  } else if (auto a2 = dynamic_cast<const A2Group*>(&g)) {
    const auto& t = a2->ops().triella();
    j["q"] = t.plane().q;
    j["lines"] = t.plane().lines;
    j["lambda"] = t.lambda();
    Json triples = Json::array();
    for (const auto& tr : t.triples()) triples.push_back({tr[0], tr[1], tr[2]});
    j["triples"] = triples;
  }
  return j;
}

Cocycle cocycle_from_json(const Presentation& p, const Json& j) {
  if (!j.is_object() || !j.contains("group")) fail(ErrorCode::kMalformedInput, "cocycle needs a 'group'");
  auto group = group_from_json(j.at("group"));
  std::map<std::string, GroupElem> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_object()) fail(ErrorCode::kMalformedInput, "'labels' must be an object");
    for (const auto& [edge, value] : j.at("labels").items()) {
      if (!value.is_string()) fail(ErrorCode::kMalformedInput, "labels must be strings");
      labels[edge] = group->parse(value.get<std::string>());
    }
  }
  return Cocycle(group, p, labels);
}

Json cocycle_to_json(const Presentation& p, const Cocycle& c) {
  Json j;
  j["group"] = group_to_json(c.group());
  Json labels = Json::object();
  for (int e = 0; e < p.num_edges(); ++e) labels[p.edge_name(e)] = c.group().format(c.edge(e));
  j["labels"] = labels;
  return j;
}

Cocycle free_cocycle(const Presentation& p) {
  auto group = std::make_shared<FreeGroup>(p.num_edges());
  std::map<std::string, GroupElem> labels;
  for (int e = 0; e < p.num_edges(); ++e) labels[p.edge_name(e)] = FreeGroup::generator(e);
  return Cocycle(group, p, labels);
}

Json morphism_to_json(const Presentation& p, const Morphism& m) {
  Json j;
  j["range"] = p.vertex_name(m.range);
  j["source"] = p.vertex_name(m.source);
  j["degree"] = m.degree.values();
  j["edges"] = edge_ids(p, m);
  j["label"] = morphism_label(p, m);
  return j;
}

Json abelian_to_json(const AbelianInvariants& a) {
  Json j;
  j["rank"] = a.rank;
  j["torsion"] = a.torsion;
  j["text"] = a.str();
  return j;
}

Json proof_to_json(const Presentation& p, const CollapseProof& proof) {
  auto gp = fundamental_group_presentation(p);
  Json j;
  j["lhs"] = morphism_to_json(p, proof.lhs);
  j["rhs"] = morphism_to_json(p, proof.rhs);
  j["start"] = gp.format(proof.start);
  j["end"] = gp.format(proof.end);
  j["round"] = proof.round;
  j["rules"] = proof.rules;
  Json steps = Json::array();
  for (const auto& s : proof.steps) {
    Json step;
    step["pos"] = s.pos;
    step["from"] = gp.format(s.from);
    step["to"] = gp.format(s.to);
    if (s.relator >= 0) step["relator"] = s.relator;
    else step["relator"] = nullptr;
    steps.push_back(step);
  }
  j["steps"] = steps;
  auto replay = replay_collapse_proof(p, proof);
  j["replay"] = replay.ok ? "ok" : replay.message;
  return j;
}

Json embeddability_to_json(const Presentation& p, const EmbeddabilityReport& r, const AnalysisExtras& extras) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["reason"] = r.reason;
  j["depth"] = r.depth;
  j["degree_bound"] = r.degree_bound.values();
  if (r.abelian_available) j["abelian_invariants"] = abelian_to_json(r.abelian);
  else j["abelian_invariants"] = nullptr;
  j["singly_connected"] = tri_state_name(r.singly_connected);
  if (extras.simply_connected) {
    j["simply_connected"] = tri_state_name(extras.simply_connected->verdict);
    j["simply_connected_reason"] = extras.simply_connected->reason;
  }
  if (extras.grading) {
    if (extras.grading->ok) {
      Json g = Json::object();
      for (int v = 0; v < p.num_vertices(); ++v)
        g[p.vertex_name(v)] = extras.grading->values[static_cast<std::size_t>(v)].values();
      j["grading"] = g;
    } else {
      j["grading"] = nullptr;
      j["grading_witness"] = extras.grading->witness_edge;
    }
  }
  if (r.proof) {
    j["witness"] = {morphism_label(p, r.proof->lhs), morphism_label(p, r.proof->rhs)};
    j["proof"] = proof_to_json(p, *r.proof);
  }
  if (r.singly_connected_witness) {
    Json w;
    w["lhs"] = morphism_to_json(p, r.singly_connected_witness->first);
    w["rhs"] = morphism_to_json(p, r.singly_connected_witness->second);
    j["singly_connected_witness"] = w;
  }
  if (r.cocycle) {
    Json c;
    c["source"] = r.cocycle->source;
    c["checked_up_to"] = r.cocycle->checked_up_to.values();
    c["exact"] = r.cocycle->exact;
    c["cocycle"] = cocycle_to_json(p, r.cocycle->cocycle);
    if (!r.cocycle->note.empty()) c["note"] = r.cocycle->note;
    j["cocycle"] = c;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json separation_to_json(const SeparationVerdict& v) {
  Json j;
  j["verdict"] = v.separated ? "SeparatedAt" : "NotSeparatedWithin";
  j["n"] = v.n;
  j["n_max"] = v.n_max;
  if (v.separated) {
    j["reach_x"] = v.reach_x;
    j["reach_y"] = v.reach_y;
  } else {
    j["witnesses"] = v.witnesses;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hrg
