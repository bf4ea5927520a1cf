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

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "hrg/constructions.hpp"
#include "hrg/json_io.hpp"
#include "hrg/kgraph.hpp"
#include "oracles.hpp"

using namespace hrg;

namespace {

Presentation fixture(const std::string& name) { return *catalog(name).finite; }

Morphism word_morphism(const Presentation& p, int u, const std::vector<int>& w) {
  return w.empty() ? vertex_morphism(p, u) : canonical_form(p, w);
}

Morphism edge_named(const Presentation& p, const std::string& id) { return edge_morphism(p, p.edge_index(id)); }

std::vector<std::string> ids(const Presentation& p, const Morphism& m) {
  std::vector<std::string> out;
  for (int e : m.word) out.push_back(p.edge_name(e));
  return out;
}

Presentation with_squares(const Presentation& p, std::vector<Square> squares) {
  return Presentation(p.rank(), p.vertices(), p.edges(), std::move(squares));
}

// Hexagon-free corruption: either drop a square or give it the output pair of
// another square with the same colours. Both break bijectivity.
Presentation corrupt(const Presentation& p, std::mt19937& rng) {
  auto squares = p.squares();
  std::uniform_int_distribution<std::size_t> pick(0, squares.size() - 1);
  std::size_t s = pick(rng);
  std::vector<std::size_t> partners;
  auto colors = [&](const Square& q) { return std::make_pair(p.color(p.edge_index(q.i_edge)), p.color(p.edge_index(q.j_edge))); };
  for (std::size_t t = 0; t < squares.size(); ++t)
    if (t != s && colors(squares[t]) == colors(squares[s]) &&
        (squares[t].j_prime != squares[s].j_prime || squares[t].i_prime != squares[s].i_prime))
      partners.push_back(t);
  if (partners.empty() || rng() % 2 == 0) {
    squares.erase(squares.begin() + static_cast<long>(s));
  } else {
    const Square& t = squares[partners[rng() % partners.size()]];
    squares[s].j_prime = t.j_prime;
    squares[s].i_prime = t.i_prime;
  }
  return with_squares(p, std::move(squares));
}

// A non-Yang-Baxter square bijection on X = {0, 1}, three colours. Found by
// search so the test does not depend on a hand-picked table.
Presentation non_yang_baxter_3graph() {
  std::vector<std::pair<int, int>> targets{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::sort(targets.begin(), targets.end());
  do {
    YangBaxterMap r{2, targets};
    try {
      check_yang_baxter(r);
      continue;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotYangBaxter) continue;
    }
    std::vector<Edge> edges;
    for (int c = 1; c <= 3; ++c)
      for (int x = 0; x < 2; ++x) edges.push_back(Edge{"c" + std::to_string(c) + "x" + std::to_string(x), c, "v", "v"});
    auto name = [](int c, int x) { return "c" + std::to_string(c) + "x" + std::to_string(x); };
    std::vector<Square> squares;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        for (int e = 0; e < 2; ++e)
          for (int f = 0; f < 2; ++f) {
            auto [fp, ep] = r.r[static_cast<std::size_t>(e * 2 + f)];
            squares.push_back(Square{name(i, e), name(j, f), name(j, fp), name(i, ep)});
          }
    return Presentation(3, {"v"}, edges, squares);
  } while (std::next_permutation(targets.begin(), targets.end()));
  FAIL("no non-Yang-Baxter bijection found");
  return {};
}

// Rigidity from the raw square list: for edges e, f of different colours
// there is exactly one (e', f') with e'f = f'e and one (e'', f'') with
// ef'' = fe''.
bool rigid_oracle(const Presentation& p) {
  auto color = [&](const std::string& id) { return p.color(p.edge_index(id)); };
  // Unordered equalities x y = z w between two-edge words.
  std::set<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>> eq;
  for (const auto& s : p.squares()) {
    eq.insert({{s.i_edge, s.j_edge}, {s.j_prime, s.i_prime}});
    eq.insert({{s.j_prime, s.i_prime}, {s.i_edge, s.j_edge}});
  }
  for (const auto& e : p.edges())
    for (const auto& f : p.edges()) {
      if (e.color == f.color) continue;
      int first = 0, second = 0;
      for (const auto& e1 : p.edges())
        for (const auto& f1 : p.edges()) {
          if (color(e1.id) != e.color || color(f1.id) != f.color) continue;
          if (eq.count({{e1.id, f.id}, {f1.id, e.id}})) ++first;
          if (eq.count({{e.id, f1.id}, {f.id, e1.id}})) ++second;
        }
      if (first != 1 || second != 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("degrees") {
  Degree a{1, 2}, b{0, 3};
  CHECK(a + b == Degree{1, 5});
  CHECK(a + b == b + a);
  CHECK((a + b) + Degree{2, 2} == a + (b + Degree{2, 2}));
  CHECK(a + Degree(2) == a);
  CHECK(Degree{0, 2}.le(a));
  CHECK_FALSE(a.le(b));
  CHECK_FALSE(b.le(a));
  CHECK(Degree::parse("(3,0,1)") == Degree{3, 0, 1});
  CHECK(Degree{3, 0, 1}.str() == "(3,0,1)");
  CHECK_THROWS_AS(Degree::parse("(1,x)"), Error);
  CHECK_THROWS_AS((a + Degree{1, 1, 1}), Error);
  CHECK(degrees_up_to(Degree{1, 2}).size() == 6);
  CHECK(degrees_up_to(Degree{1, 2}).front() == Degree{0, 0});
}

TEST_CASE("presentation structure errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  CHECK(code([] { Presentation(1, {"u", "u"}, {}, {}); }) == ErrorCode::kMalformedInput);
  CHECK(code([] { Presentation(1, {"u"}, {{"e", 1, "u", "u"}, {"e", 1, "u", "u"}}, {}); }) ==
        ErrorCode::kMalformedInput);
  CHECK(code([] { Presentation(1, {"u"}, {{"e", 1, "u", "w"}}, {}); }) == ErrorCode::kMalformedInput);
  CHECK(code([] { Presentation(1, {"u"}, {{"e", 0, "u", "u"}}, {}); }) == ErrorCode::kColorOutOfRange);
  CHECK(code([] { Presentation(2, {"u"}, {{"e", 3, "u", "u"}}, {}); }) == ErrorCode::kColorOutOfRange);
  CHECK(code([] { Presentation(2, {"u"}, {{"e", 1, "u", "u"}}, {{"e", "x", "e", "e"}}); }) ==
        ErrorCode::kMalformedInput);
  CHECK(code([] { presentation_from_string("{\"k\": 1}"); }) == ErrorCode::kMalformedInput);
  CHECK(code([] { presentation_from_string("[1,"); }) == ErrorCode::kMalformedInput);
}

TEST_CASE("validation") {
  SUBCASE("the pqr fixture passes") {
    auto p = fixture("pqr-7.1");
    CHECK(p.num_vertices() == 1);
    CHECK(p.num_edges() == 5);
    auto r = validate_presentation(p);
    CHECK(r.pass);
    CHECK(r.squares_checked == 6);
  }
  SUBCASE("deleting the square for (d, a) fails") {
    auto p = fixture("pqr-7.1");
    auto squares = p.squares();
    squares.erase(std::remove_if(squares.begin(), squares.end(),
                                 [](const Square& s) { return s.i_edge == "d" && s.j_edge == "a"; }),
                  squares.end());
    auto r = validate_presentation(with_squares(p, squares));
    CHECK_FALSE(r.pass);
    CHECK(r.failure == "square_not_bijective");
    std::set<std::string> w(r.witness.begin(), r.witness.end());
    CHECK(w == std::set<std::string>{"d", "a"});
    // A window of a lazy graph may lack squares.
    CHECK(validate_presentation(with_squares(p, squares), ValidationMode::kPartial).pass);
  }
  SUBCASE("the tricolour 3-graph passes with a vacuous hexagon check") {
    auto r = validate_presentation(fixture("tricolour"));
    CHECK(r.pass);
    CHECK(r.hexagon_vacuous);
    CHECK(r.hexagons_checked == 0);
  }
  SUBCASE("hexagon mismatch") {
    auto p = non_yang_baxter_3graph();
    auto r = validate_presentation(p);
    CHECK_FALSE(r.pass);
    CHECK(r.failure == "hexagon_mismatch");
    CHECK(r.witness.size() == 3);
    CHECK_FALSE(r.hexagon_vacuous);
  }
  SUBCASE("square incidence") {
    auto p = fixture("prop-3.21");
    auto squares = p.squares();
    squares[0].j_prime = "e";  // wrong vertex for f'
    auto r = validate_presentation(with_squares(p, squares));
    CHECK_FALSE(r.pass);
    CHECK(r.failure == "square_incidence");
  }
  SUBCASE("random corruption is always caught") {
    std::mt19937 rng(3301);
    int trials = 0;
    for (const auto& name : catalog_finite_names()) {
      auto p = fixture(name);
      if (p.squares().empty()) continue;
      for (int t = 0; t < 50; ++t, ++trials) {
        auto q = corrupt(p, rng);
        CAPTURE(name);
        CHECK_FALSE(validate_presentation(q).pass);
      }
    }
    CHECK(trials >= 300);
  }
}

TEST_CASE("composition") {
  auto p = fixture("pqr-7.1");
  auto d = edge_named(p, "d"), a = edge_named(p, "a");
  auto v = vertex_morphism(p, 0);
  CHECK(compose(p, v, a) == a);
  CHECK(compose(p, a, v) == a);
  auto da = compose(p, d, a);
  auto ad = compose(p, a, d);
  CHECK(da == ad);
  CHECK(ids(p, da) == std::vector<std::string>{"d", "a"});
  CHECK(da.degree == Degree{1, 1});
  // dc = ae: the canonical form of a.e starts with d.
  CHECK(ids(p, compose(p, a, edge_named(p, "e"))) == std::vector<std::string>{"d", "c"});

  auto s = fixture("swap-14");
  auto e1f4 = compose(s, edge_named(s, "e1"), edge_named(s, "f4"));
  auto f4e1 = compose(s, edge_named(s, "f4"), edge_named(s, "e1"));
  CHECK(e1f4 == canonical_form(s, std::vector<std::string>{"e1", "f4"}));
  // e1 f4 = f4 e1: the (1,4) relation is a commutation.
  CHECK(e1f4 == f4e1);
  CHECK(ids(s, compose(s, edge_named(s, "f1"), edge_named(s, "e4"))) == std::vector<std::string>{"e4", "f1"});

  auto t = fixture("cycle4");
  CHECK_THROWS_AS(compose(t, edge_named(t, "e"), edge_named(t, "f")), Error);
  try {
    compose(t, edge_named(t, "e"), edge_named(t, "f"));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kNotComposable);
  }
}

TEST_CASE("segments") {
  auto p = fixture("pqr-7.1");
  auto da = canonical_form(p, std::vector<std::string>{"d", "a"});
  CHECK(segment(p, da, Degree{0, 0}, da.degree) == da);
  auto mid = segment(p, da, Degree{1, 0}, Degree{1, 0});
  CHECK(mid.word.empty());
  CHECK(mid.degree == Degree{0, 0});
  CHECK(ids(p, segment(p, da, Degree{0, 0}, Degree{1, 0})) == std::vector<std::string>{"d"});
  CHECK(ids(p, segment(p, da, Degree{0, 0}, Degree{0, 1})) == std::vector<std::string>{"a"});
  CHECK(ids(p, segment(p, da, Degree{0, 1}, Degree{1, 1})) == std::vector<std::string>{"d"});
  CHECK_THROWS_AS((segment(p, da, Degree{1, 0}, Degree{0, 1})), Error);
  CHECK_THROWS_AS((segment(p, da, Degree{0, 0}, Degree{2, 0})), Error);
}

TEST_CASE("factorizations are unique (exhaustive)") {
  for (const char* name : {"pqr-7.1", "swap-14", "prop-3.21", "tricolour", "yb-3-swap"}) {
    CAPTURE(name);
    auto p = fixture(name);
    Degree bound = p.rank() == 3 ? Degree{1, 1, 1} : Degree{2, 1};
    std::size_t checked = 0;
    for (int u = 0; u < p.num_vertices(); ++u)
      for (const Degree& n : degrees_up_to(bound))
        for (const auto& w : oracle::sorted_words(p, u, n)) {
          auto lambda = word_morphism(p, u, w);
          for (const Degree& m : degrees_up_to(n)) {
            int hits = 0;
            for (const auto& mu : oracle::sorted_words(p, u, m)) {
              int mid = oracle::word_source(p, u, mu);
              for (const auto& nu : oracle::sorted_words(p, mid, n - m)) {
                auto c = compose(p, word_morphism(p, u, mu), word_morphism(p, mid, nu));
                if (c == lambda) {
                  ++hits;
                  CHECK(segment(p, lambda, Degree(p.rank()), m).word == mu);
                  CHECK(segment(p, lambda, m, n).word == nu);
                }
              }
            }
            CHECK(hits == 1);
            ++checked;
          }
        }
    CHECK(checked > 0);
  }
}

TEST_CASE("compose and segment round trips on every fixture") {
  std::mt19937 rng(90210);
  for (const auto& name : catalog_finite_names()) {
    CAPTURE(name);
    auto p = fixture(name);
    int done = 0, attempts = 0;
    while (done < 1000 && attempts < 100000) {
      ++attempts;
      int u = static_cast<int>(rng() % static_cast<unsigned>(p.num_vertices()));
      auto n = oracle::random_degree(p.rank(), 3, rng);
      auto w = oracle::random_sorted_word(p, u, n, rng);
      if (!w) continue;
      Morphism lambda = w->empty() ? vertex_morphism(p, u) : canonical_form(p, *w);
      REQUIRE(lambda.word == *w);
      REQUIRE(lambda.degree == n);
      auto [m, k] = oracle::random_interval(n, rng);
      auto a = segment(p, lambda, Degree(p.rank()), m);
      auto b = segment(p, lambda, m, k);
      auto c = segment(p, lambda, k, n);
      CHECK(a.degree == m);
      CHECK(b.degree == k - m);
      CHECK(c.degree == n - k);
      CHECK(a.range == lambda.range);
      CHECK(c.source == lambda.source);
      CHECK(compose(p, a, compose(p, b, c)) == lambda);
      CHECK(compose(p, compose(p, a, b), c) == lambda);
      ++done;
    }
    CHECK(done == 1000);
  }
}

TEST_CASE("canonical forms") {
  auto p = fixture("pqr-7.1");
  auto sorted = canonical_form(p, std::vector<std::string>{"d", "e", "a", "b"});
  CHECK(ids(p, sorted) == std::vector<std::string>{"d", "e", "a", "b"});
  CHECK(canonical_form(p, std::vector<std::string>{"d", "a"}) == canonical_form(p, std::vector<std::string>{"a", "d"}));
  CHECK_THROWS_AS((canonical_form(p, std::vector<std::string>{})), Error);

  SUBCASE("no composable three-coloured words in tricolour") {
    auto t = fixture("tricolour");
    int tried = 0;
    for (const auto& x : t.edges())
      for (const auto& y : t.edges())
        for (const auto& z : t.edges()) {
          std::set<int> colors{x.color, y.color, z.color};
          if (colors.size() != 3) continue;
          ++tried;
          try {
            canonical_form(t, std::vector<std::string>{x.id, y.id, z.id});
            FAIL("three-coloured word accepted");
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kNotComposable);
          }
        }
    CHECK(tried > 0);
  }

  SUBCASE("idempotent and constant under single-square rewrites") {
    std::mt19937 rng(1777);
    for (const char* name : {"pqr-7.1", "swap-14", "yb-3-swap", "prop-3.21"}) {
      CAPTURE(name);
      auto q = fixture(name);
      for (int t = 0; t < 300; ++t) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(q.num_vertices()));
        auto w = oracle::random_sorted_word(q, u, oracle::random_degree(q.rank(), 2, rng), rng);
        if (!w || w->empty()) continue;
        auto lambda = canonical_form(q, *w);
        CHECK(canonical_form(q, lambda.word) == lambda);
        // Shuffle colours with random backward swaps f'e' <- ef.
        std::vector<int> cur = *w;
        for (int step = 0; step < 6; ++step) {
          std::size_t i = rng() % cur.size();
          if (i + 1 >= cur.size() || q.color(cur[i]) >= q.color(cur[i + 1])) continue;
          auto r = q.forward(cur[i], cur[i + 1]);
          REQUIRE(r);
          cur[i] = r->first;
          cur[i + 1] = r->second;
          CHECK(canonical_form(q, cur) == lambda);
        }
        std::vector<int> target;
        for (int e : cur) target.push_back(q.color(e));
        CHECK(reorder(q, lambda.word, target) == cur);
      }
    }
  }
}

TEST_CASE("enumeration") {
  auto p = fixture("pqr-7.1");
  auto edges1 = morphisms(p, 0, 0, Degree{1, 0});
  REQUIRE(edges1.size() == 2);
  CHECK(ids(p, edges1[0]) == std::vector<std::string>{"d"});
  CHECK(ids(p, edges1[1]) == std::vector<std::string>{"e"});
  CHECK(morphisms(p, 0, 0, Degree{1, 1}).size() == 6);
  CHECK(morphisms(p, 0, 0, Degree{2, 3}).size() == 4 * 27);

  auto c = fixture("cycle4");
  CHECK(morphisms(c, c.vertex_index("u"), c.vertex_index("v"), Degree{0}).empty());
  CHECK(morphisms(c, c.vertex_index("v"), c.vertex_index("u"), Degree{1}).size() == 1);

  // Against the brute-force enumeration on every fixture.
  for (const auto& name : catalog_finite_names()) {
    CAPTURE(name);
    auto q = fixture(name);
    Degree bound = Degree::ones(q.rank());
    if (q.num_vertices() > 100) continue;
    for (int u = 0; u < q.num_vertices(); ++u)
      for (const Degree& n : degrees_up_to(bound)) {
        auto words = oracle::sorted_words(q, u, n);
        CHECK(morphisms_from(q, u, n).size() == words.size());
        std::size_t total = 0;
        for (int v = 0; v < q.num_vertices(); ++v) total += morphisms(q, u, v, n).size();
        CHECK(total == words.size());
      }
  }
}

TEST_CASE("adjacency matrices") {
  auto p = fixture("pqr-7.1");
  auto m = adjacency_matrices(p);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == Matrix{{2}});
  CHECK(m[1] == Matrix{{3}});
  CHECK(matmul(m[0], m[1]) == Matrix{{6}});

  auto empty = adjacency_matrices(Presentation(2, {"a", "b"}, {}, {}));
  CHECK(empty[0] == Matrix{{0, 0}, {0, 0}});
  CHECK(empty[1] == Matrix{{0, 0}, {0, 0}});

  for (const auto& name : catalog_finite_names()) {
    CAPTURE(name);
    auto q = fixture(name);
    auto ms = adjacency_matrices(q);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK(matmul(ms[i], ms[j]) == matmul(ms[j], ms[i]));
    // (M_i)_{u,v} counts colour-i edges from v to u.
    for (int e = 0; e < q.num_edges(); ++e) CHECK(ms[static_cast<std::size_t>(q.color(e) - 1)][static_cast<std::size_t>(q.rng(e))][static_cast<std::size_t>(q.src(e))] >= 1);
  }
}

TEST_CASE("connectivity") {
  auto p = fixture("pqr-7.1");
  auto r = connectivity_report(p);
  CHECK(r.strongly_connected);
  CHECK(r.components.size() == 1);
  CHECK(r.singly_connected == TriState::kNo);
  REQUIRE(r.witness);
  CHECK(r.witness->first.range == r.witness->second.range);
  CHECK(r.witness->first.source == r.witness->second.source);
  CHECK_FALSE(r.witness->first == r.witness->second);

  auto c = connectivity_report(fixture("cycle4"));
  CHECK(c.singly_connected == TriState::kYes);
  CHECK_FALSE(c.has_cycle);
  CHECK_FALSE(c.strongly_connected);
  CHECK(c.components.size() == 1);

  auto t = connectivity_report(fixture("tree-fixture"));
  CHECK(t.singly_connected == TriState::kYes);

  // Singly connected means at most one morphism per ordered pair.
  for (const char* name : {"cycle4", "tree-fixture"}) {
    auto q = fixture(name);
    int diameter = q.num_vertices();
    for (int u = 0; u < q.num_vertices(); u += (q.num_vertices() > 100 ? 97 : 1)) {
      std::map<int, int> count;
      for (int n = 0; n <= diameter && n <= 12; ++n)
        for (const auto& m : morphisms_from(q, u, Degree{n})) ++count[m.source];
      for (const auto& [v, k] : count) CHECK(k <= 1);
    }
  }

  // Two components.
  auto split = connectivity_report(Presentation(1, {"a", "b", "c"}, {{"e", 1, "a", "b"}}, {}));
  CHECK(split.components.size() == 2);

  // Rigidity against the square-list oracle.
  for (const char* name : {"pqr-7.1", "swap-14", "yb-3-swap", "B2"}) {
    CAPTURE(name);
    auto q = fixture(name);
    CHECK(connectivity_report(q).rigid == rigid_oracle(q));
  }
  CHECK_FALSE(connectivity_report(fixture("swap-14")).rigid);
  CHECK(connectivity_report(monoidal_2graph(2, 2, {{1, 1}, {2, 1}, {1, 2}, {2, 2}})).rigid);
}

TEST_CASE("json and dot") {
  for (const auto& name : catalog_finite_names()) {
    CAPTURE(name);
    auto p = fixture(name);
    auto text = presentation_to_string(p);
    auto back = presentation_from_string(text);
    CHECK(presentation_to_string(back) == text);
    CHECK(back.vertices() == p.vertices());
    CHECK(back.edges() == p.edges());
    CHECK(back.squares() == p.squares());
    auto dot = presentation_to_dot(p);
    CHECK(dot.rfind("digraph", 0) == 0);
  }

  // Committed fixture files round-trip byte for byte.
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(HRG_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    auto text = read_file(entry.path().string());
    CAPTURE(entry.path().string());
    CHECK(presentation_to_string(presentation_from_string(text)) == text);
    ++files;
  }
  CHECK(files == static_cast<int>(catalog_finite_names().size()));

  auto v = validation_to_json(validate_presentation(fixture("pqr-7.1")));
  CHECK(v["pass"] == true);
}

TEST_CASE("lazy graphs and windows") {
  auto p = fixture("pqr-7.1");
  FiniteKGraph fk(p);
  auto w = window(fk, {"v"}, 1);
  auto sorted_edges = [](std::vector<Edge> es) {
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return es;
  };
  auto square_set = [](const std::vector<Square>& ss) {
    std::set<std::vector<std::string>> out;
    for (const auto& q : ss) out.insert({q.i_edge, q.j_edge, q.j_prime, q.i_prime});
    return out;
  };
  CHECK(w.vertices() == p.vertices());
  CHECK(sorted_edges(w.edges()) == sorted_edges(p.edges()));
  CHECK(square_set(w.squares()) == square_set(p.squares()));

  OmegaGraph omega(2);
  CHECK(omega.has_vertex("(0,0)"));
  CHECK_FALSE(omega.has_vertex("(-1,0)"));
  auto ow = window(omega, {"(0,0)"}, 2);
  CHECK(validate_presentation(ow, ValidationMode::kPartial).pass);
  CHECK(ow.num_vertices() == 6);  // (a,b) with a+b <= 2
  auto closed = square_closed_window(omega, {"(0,0)"}, 2);
  CHECK(validate_presentation(closed, ValidationMode::kPartial).pass);
  CHECK_THROWS_AS((window(omega, {"nowhere"}, 1)), Error);

  auto e = catalog("lambda-E-4.5");
  REQUIRE(e.lazy);
  std::vector<std::string> into;
  for (const auto& edge : e.lazy->edges_into("u0")) into.push_back(edge.id);
  CHECK(into == std::vector<std::string>{"e0", "g0"});
}
