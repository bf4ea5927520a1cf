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

#include <random>

#include "hrg/constructions.hpp"
#include "hrg/groupoid.hpp"
#include "oracles.hpp"

using namespace hrg;

namespace {

Presentation fixture(const std::string& name) { return *catalog(name).finite; }

Degree twos(int k) { return Degree::ones(k) + Degree::ones(k); }

// Exhaustive injectivity of c on every u Lambda^n v with n <= bound, using
// sorted edge words instead of the library's enumeration.
bool injective_up_to(const Presentation& p, const Cocycle& c, const Degree& bound) {
  for (const Degree& n : degrees_up_to(bound))
    for (int u = 0; u < p.num_vertices(); ++u) {
      std::map<std::pair<int, GroupElem>, int> seen;
      for (const auto& w : oracle::sorted_words(p, u, n))
        if (++seen[{oracle::word_source(p, u, w), c.of_word(w)}] > 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("free reduction and inversion") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, -1, 1}) == Word{1});
  CHECK(invert_word({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(free_reduce({}).empty());
}

TEST_CASE("fundamental group presentations") {
  SUBCASE("tree has the trivial presentation") {
    auto gp = fundamental_group_presentation(fixture("tree-fixture"));
    CHECK(gp.generators.empty());
    CHECK(gp.relators.empty());
    CHECK(gp.basepoint == "t");
  }
  SUBCASE("four-cycle 1-graph gives one free generator") {
    auto gp = fundamental_group_presentation(fixture("cycle4"));
    CHECK(gp.generators.size() == 1);
    CHECK(gp.relators.empty());
    CHECK(abelianized_invariants(gp).rank == 1);
  }
  SUBCASE("pqr fixture has 5 generators and 6 relators") {
    auto gp = fundamental_group_presentation(fixture("pqr-7.1"));
    CHECK(gp.generators.size() == 5);
    CHECK(gp.relators.size() == 6);
    auto inv = abelianized_invariants(gp);
    CHECK(inv.rank == 2);
    CHECK(inv.torsion.empty());
  }
  SUBCASE("disconnected input is rejected") {
    Presentation p(1, {"a", "b"}, {}, {});
    CHECK_THROWS_AS(fundamental_group_presentation(p), Error);
  }
  SUBCASE("basepoint must be declared") {
    CHECK_THROWS_AS(fundamental_group_presentation(fixture("B1"), "nope"), Error);
  }
}

TEST_CASE("abelian invariants") {
  SUBCASE("empty presentation") { CHECK(abelianized_invariants(GroupPresentation{}).rank == 0); }
  SUBCASE("doubled relator gives 2-torsion") {
    GroupPresentation gp;
    gp.generators = {"a", "b"};
    gp.relators = {{1, 1, -2, -2}};
    auto inv = abelianized_invariants(gp);
    CHECK(inv.rank == 1);
    CHECK(inv.torsion == std::vector<long long>{2});
    CHECK(inv.str() == "Z^1 + Z/2");
  }
  SUBCASE("random relator matrices agree with determinantal divisors") {
    std::mt19937 rng(7101);
    std::uniform_int_distribution<int> dim(1, 4), entry(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
      int gens = dim(rng), rels = dim(rng);
      GroupPresentation gp;
      std::vector<std::vector<long long>> a;
      for (int g = 0; g < gens; ++g) gp.generators.push_back("x" + std::to_string(g));
      for (int r = 0; r < rels; ++r) {
        Word w;
        std::vector<long long> row;
        for (int g = 1; g <= gens; ++g) {
          int x = entry(rng);
          row.push_back(x);
          for (int t = 0; t < std::abs(x); ++t) w.push_back(x > 0 ? g : -g);
        }
        a.push_back(row);
        gp.relators.push_back(w);
      }
      std::vector<std::vector<long long>> images;
      auto inv = abelianized_invariants(gp, &images);
      auto [rank, torsion] = oracle::abelian_invariants(a, static_cast<std::size_t>(gens));
      CAPTURE(trial);
      CHECK(inv.rank == rank);
      CHECK(inv.torsion == torsion);
      for (std::size_t i = 1; i < inv.torsion.size(); ++i) CHECK(inv.torsion[i] % inv.torsion[i - 1] == 0);
      // Every relator maps to zero under the generator images.
      for (const auto& row : a) {
        std::vector<long long> sum(images[0].size(), 0);
        for (int g = 0; g < gens; ++g)
          for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += row[static_cast<std::size_t>(g)] * images[static_cast<std::size_t>(g)][c];
        for (std::size_t c = 0; c < sum.size(); ++c) {
          std::size_t t = c - static_cast<std::size_t>(inv.rank);
          if (c < static_cast<std::size_t>(inv.rank)) CHECK(sum[c] == 0);
          else CHECK(sum[c] % inv.torsion[t] == 0);
        }
      }
    }
  }
}

TEST_CASE("essential cocycle search") {
  SUBCASE("1-graphs get the free cocycle") {
    for (const char* name : {"B1", "B2", "B3", "cycle4", "tree-fixture"}) {
      CAPTURE(name);
      auto p = fixture(name);
      auto c = essential_cocycle_search(p, Degree{4});
      REQUIRE(c);
      CHECK(c->source == "free");
      CHECK(injective_up_to(p, c->cocycle, Degree{4}));
    }
  }
  SUBCASE("pqr fixture has no essential abelian cocycle") {
    auto p = fixture("pqr-7.1");
    CHECK_FALSE(essential_cocycle_search(p, twos(2)));
    // The abelian images of a, b, c coincide; checked directly.
    auto gp = fundamental_group_presentation(p);
    std::vector<std::vector<long long>> img;
    abelianized_invariants(gp, &img);
    auto label = [&](const char* e) { return img[static_cast<std::size_t>(gp.edge_letter[static_cast<std::size_t>(p.edge_index(e))] - 1)]; };
    CHECK(label("a") == label("b"));
    CHECK(label("b") == label("c"));
  }
  SUBCASE("hint on the blue-red piece of tricolour is accepted") {
    auto p = fixture("tricolour-12");
    auto z = std::make_shared<AbelianGroup>(1);
    std::map<std::string, GroupElem> labels;
    for (const auto& e : p.edges())
      if (e.id[0] == 'f' && e.id.back() != '\'') labels[e.id] = {1};
    Cocycle hint(z, p, labels);
    auto c = essential_cocycle_search(p, twos(2), hint);
    REQUIRE(c);
    CHECK(c->source == "hint");
    CHECK(injective_up_to(p, c->cocycle, twos(2)));
  }
  SUBCASE("random monoidal 2-graphs: returned cocycles pass the oracle") {
    std::mt19937 rng(2213);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
      auto p = oracle::random_monoidal(rng);
      auto c = essential_cocycle_search(p, twos(2));
      if (!c) continue;
      ++found;
      CHECK(injective_up_to(p, c->cocycle, twos(2)));
      CHECK_FALSE(injectivity_violation(p, c->cocycle, twos(2)));
    }
    CHECK(found > 0);
  }
}

TEST_CASE("collapse search") {
  SUBCASE("pqr fixture: a and b collapse") {
    auto p = fixture("pqr-7.1");
    auto proof = collapse_search(p, 10);
    REQUIRE(proof);
    CHECK(proof->lhs_edges == std::vector<std::string>{"a"});
    CHECK(proof->rhs_edges == std::vector<std::string>{"b"});
    CHECK(replay_collapse_proof(p, *proof).ok);
  }
  SUBCASE("swap-14: e1f4 and e4f1 collapse") {
    auto p = fixture("swap-14");
    auto proof = collapse_search(p, 10);
    REQUIRE(proof);
    CHECK(proof->lhs_edges == std::vector<std::string>{"e1", "f4"});
    CHECK(proof->rhs_edges == std::vector<std::string>{"e4", "f1"});
    CHECK(replay_collapse_proof(p, *proof).ok);
    // The two paths are distinct morphisms.
    CHECK(canonical_form(p, std::vector<std::string>{"e1", "f4"}) != canonical_form(p, std::vector<std::string>{"e4", "f1"}));
  }
  SUBCASE("tricolour: f1 and f1' collapse") {
    auto p = fixture("tricolour");
    auto proof = collapse_search(p, 20);
    REQUIRE(proof);
    CHECK(proof->lhs_edges == std::vector<std::string>{"f1"});
    CHECK(proof->rhs_edges == std::vector<std::string>{"f1'"});
    CHECK(replay_collapse_proof(p, *proof).ok);
  }
  SUBCASE("tampered proofs fail replay") {
    auto p = fixture("pqr-7.1");
    auto proof = *collapse_search(p, 10);
    auto bad = proof;
    bad.steps.pop_back();
    CHECK_FALSE(replay_collapse_proof(p, bad).ok);
    bad = proof;
    bad.steps[0].to.push_back(1);
    CHECK_FALSE(replay_collapse_proof(p, bad).ok);
    bad = proof;
    bad.rhs_edges = bad.lhs_edges;
    CHECK_FALSE(replay_collapse_proof(p, bad).ok);
  }
  SUBCASE("1-graphs never collapse") {
    for (const char* name : {"B2", "cycle4", "tree-fixture"}) CHECK_FALSE(collapse_search(fixture(name), 10));
  }
  SUBCASE("random monoidal 2-graphs: every proof replays") {
    std::mt19937 rng(4417);
    for (int trial = 0; trial < 60; ++trial) {
      auto p = oracle::random_monoidal(rng);
      auto proof = collapse_search(p, 6);
      if (!proof) continue;
      auto r = replay_collapse_proof(p, *proof);
      CAPTURE(r.message);
      CHECK(r.ok);
      // A collapse and an essential cocycle cannot coexist.
      CHECK_FALSE(essential_cocycle_search(p, twos(2)));
    }
  }
}

TEST_CASE("simply connected test") {
  CHECK(simply_connected_test(fixture("tree-fixture"), 10).verdict == TriState::kYes);
  auto e = simply_connected_test(fixture("cycle4"), 10);
  CHECK(e.verdict == TriState::kNo);
  CHECK(e.abelian.rank == 1);
  CHECK_THROWS_AS(simply_connected_test(Presentation(1, {"a", "b"}, {}, {}), 10), Error);

  auto base = fixture("pqr-7.1");
  SkewProduct cover(base, degree_cocycle(base));
  auto w = square_closed_window(cover, {"(0,0)|v"}, 3);
  CHECK(validate_presentation(w, ValidationMode::kPartial).pass);
  auto r = simply_connected_test(w, 10, true);
  CHECK(r.verdict == TriState::kYes);
  CHECK(r.window_caveat);
}

TEST_CASE("grading functions") {
  SUBCASE("loop edge has no grading") {
    auto g = grading_function(fixture("B1"));
    CHECK_FALSE(g.ok);
    CHECK(g.witness_edge == "f1");
  }
  SUBCASE("skew product by the degree is graded by the group coordinate") {
    auto base = fixture("pqr-7.1");
    SkewProduct cover(base, degree_cocycle(base));
    auto w = window(cover, {"(0,0)|v"}, 4);
    auto g = grading_function(w);
    REQUIRE(g.ok);
    for (int v = 0; v < w.num_vertices(); ++v) {
      const auto& id = w.vertex_name(v);
      CHECK(g.values[static_cast<std::size_t>(v)] == Degree::parse(id.substr(0, id.find('|'))));
    }
  }
  SUBCASE("omega window is graded by the identity") {
    auto omega = catalog("omega-2").lazy;
    auto w = window(*omega, {"(0,0)"}, 5);
    auto g = grading_function(w);
    REQUIRE(g.ok);
    for (int v = 0; v < w.num_vertices(); ++v)
      CHECK(g.values[static_cast<std::size_t>(v)] == Degree::parse(w.vertex_name(v)));
    // d(e) = f(s(e)) - f(r(e)) on every edge.
    for (int e = 0; e < w.num_edges(); ++e)
      CHECK(g.values[static_cast<std::size_t>(w.src(e))] - g.values[static_cast<std::size_t>(w.rng(e))] ==
            Degree::unit(2, w.color(e)));
  }
}

TEST_CASE("embeddability report") {
  SUBCASE("fixture verdicts") {
    CHECK(embeddability_report(fixture("pqr-7.1"), 10, twos(2)).verdict == Verdict::kNotEmbeds);
    CHECK(embeddability_report(fixture("swap-14"), 10, twos(2)).verdict == Verdict::kNotEmbeds);
    CHECK(embeddability_report(fixture("tricolour"), 20, twos(3)).verdict == Verdict::kNotEmbeds);
    CHECK(embeddability_report(fixture("tricolour-12"), 10, twos(2)).verdict == Verdict::kEmbeds);
    CHECK(embeddability_report(fixture("tricolour-13"), 10, twos(2)).verdict == Verdict::kEmbeds);
    auto r = embeddability_report(fixture("prop-3.21"), 10, twos(2));
    CHECK(r.verdict == Verdict::kInconclusive);
    CHECK(r.abelian_available);
  }
  SUBCASE("1-graphs always embed") {
    for (const char* name : {"B1", "B2", "B3", "cycle4", "tree-fixture"})
      CHECK(embeddability_report(fixture(name), 10, Degree{3}).verdict == Verdict::kEmbeds);
    std::mt19937 rng(1313);
    for (int trial = 0; trial < 100; ++trial)
      CHECK(embeddability_report(oracle::random_1graph(rng), 10, Degree{3}).verdict == Verdict::kEmbeds);
  }
  SUBCASE("NotEmbeds is monotone in depth") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
      auto p = oracle::random_monoidal(rng);
      auto shallow = embeddability_report(p, 4, twos(2));
      if (shallow.verdict != Verdict::kNotEmbeds) continue;
      auto deep = embeddability_report(p, 12, twos(2));
      CHECK(deep.verdict == Verdict::kNotEmbeds);
      CHECK(replay_collapse_proof(p, *deep.proof).ok);
    }
  }
}
