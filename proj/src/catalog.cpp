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

#include <algorithm>
#include <charconv>

#include "hrg/constructions.hpp"

namespace hrg {

namespace {

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Presentation bouquet(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back(Edge{"f" + std::to_string(i), 1, "u", "u"});
  return Presentation(1, {"u"}, std::move(edges), {});
}

Presentation pqr() {
  std::vector<Edge> edges{{"d", 1, "v", "v"}, {"e", 1, "v", "v"}, {"a", 2, "v", "v"}, {"b", 2, "v", "v"},
                          {"c", 2, "v", "v"}};
  // da = ad, db = be, dc = ae, ea = cd, eb = ce, ec = bd
  std::vector<Square> squares{{"d", "a", "a", "d"}, {"d", "b", "b", "e"}, {"d", "c", "a", "e"},
                              {"e", "a", "c", "d"}, {"e", "b", "c", "e"}, {"e", "c", "b", "d"}};
  return Presentation(2, {"v"}, std::move(edges), std::move(squares));
}

Presentation swap14() {
  std::vector<Edge> edges;
  for (int a = 1; a <= 4; ++a) edges.push_back(Edge{"e" + std::to_string(a), 1, "v", "v"});
  for (int b = 1; b <= 4; ++b) edges.push_back(Edge{"f" + std::to_string(b), 2, "v", "v"});
  std::vector<Square> squares;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      bool swapped = (a == 1 && b == 4) || (a == 4 && b == 1);
      int fp = swapped ? b : a;
      int ep = swapped ? a : b;
      squares.push_back(Square{"e" + std::to_string(a), "f" + std::to_string(b), "f" + std::to_string(fp),
                               "e" + std::to_string(ep)});
    }
  return Presentation(2, {"v"}, std::move(edges), std::move(squares));
}

Presentation tricolour() {
  std::vector<std::string> vertices;
  for (int i = 0; i < 8; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> edges{
      {"e1", 1, "v0", "v7"},  {"e2", 1, "v1", "v7"},  {"e3", 1, "v4", "v6"},  {"e4", 1, "v3", "v5"},
      {"f1", 2, "v0", "v4"},  {"f1'", 2, "v0", "v4"}, {"f2", 2, "v1", "v4"},  {"f2'", 2, "v1", "v4"},
      {"f3", 2, "v3", "v2"},  {"f3'", 2, "v3", "v2"}, {"f4", 2, "v7", "v6"},  {"f4'", 2, "v7", "v6"},
      {"g1", 3, "v0", "v3"},  {"g2", 3, "v1", "v3"},  {"g3", 3, "v4", "v2"},  {"g4", 3, "v7", "v5"},
  };
  std::vector<Square> squares{
      {"e3", "f1", "f4", "e1"},   {"e3", "f2", "f4", "e2"},  {"e3", "f1'", "f4'", "e1"}, {"e3", "f2'", "f4'", "e2"},
      {"e4", "g1", "g4", "e1"},   {"e4", "g2", "g4", "e2"},  {"f3", "g2", "g3", "f2"},   {"f3'", "g2", "g3", "f2'"},
      {"f3'", "g1", "g3", "f1"},  {"f3", "g1", "g3", "f1'"},
  };
  return Presentation(3, std::move(vertices), std::move(edges), std::move(squares));
}

Presentation cycle4() {
  std::vector<Edge> edges{{"e", 1, "u", "v"}, {"f", 1, "u", "x"}, {"g", 1, "w", "x"}, {"h", 1, "w", "v"}};
  return Presentation(1, {"u", "v", "w", "x"}, std::move(edges), {});
}

Presentation two_vertex_monoid() {
  std::vector<Edge> edges{{"a0", 1, "u", "v"}, {"a1", 1, "u", "v"}, {"b", 1, "v", "u"},
                          {"e", 2, "u", "u"},  {"f", 2, "v", "v"}};
  // a0 e = f a1, a1 e = f a0, b f = e b
  std::vector<Square> squares{{"a0", "e", "f", "a1"}, {"a1", "e", "f", "a0"}, {"b", "f", "e", "b"}};
  return Presentation(2, {"u", "v"}, std::move(edges), std::move(squares));
}

// Root "t" at the range end; the edge into child "t<bits>" is "x<bits>".
Presentation binary_tree(int depth) {
  std::vector<std::string> vertices{"t"};
  std::vector<Edge> edges;
  std::vector<std::string> level{""};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& bits : level)
      for (char c : {'0', '1'}) {
        std::string child = bits + c;
        vertices.push_back("t" + child);
        edges.push_back(Edge{"x" + child, 1, "t" + child, "t" + bits});
        next.push_back(child);
      }
    level = std::move(next);
  }
  return Presentation(1, std::move(vertices), std::move(edges), {});
}

// Parses "<letter><int>" or "<letter><int>_<int>".
struct ParsedId {
  char letter = 0;
  long n = 0;
  std::optional<long> i;
};

std::optional<ParsedId> parse_id(const std::string& id) {
  if (id.size() < 2) return std::nullopt;
  ParsedId p;
  p.letter = id[0];
  std::string_view rest(id);
  rest.remove_prefix(1);
  auto us = rest.find('_');
  auto n = to_long(rest.substr(0, us));
  if (!n) return std::nullopt;
  p.n = *n;
  if (us != std::string_view::npos) {
    auto i = to_long(rest.substr(us + 1));
    if (!i || *i < 0) return std::nullopt;
    p.i = *i;
  }
  return p;
}

std::string nm(char c, long n) { return std::string(1, c) + std::to_string(n); }
std::string nmi(char c, long n, long i) { return nm(c, n) + "_" + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------------------

bool NonHausdorffGraph::has_vertex(const std::string& v) const {
  auto p = parse_id(v);
  if (!p) return false;
  if (p->letter == 'u' || p->letter == 'v') return !p->i;
  return p->letter == 'w' && p->i.has_value();
}

std::vector<Edge> NonHausdorffGraph::edges_into(const std::string& v) const {
  if (!has_vertex(v)) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  auto p = *parse_id(v);
  long n = p.n;
  switch (p.letter) {
    case 'u': return {{nm('e', n), 1, nm('u', n + 1), v}, {nm('g', n), 1, nmi('w', n, 0), v}};
    case 'v': return {{nm('f', n), 1, nm('v', n + 1), v}, {nm('h', n), 1, nmi('w', n, 0), v}};
    default: return {{nmi('k', n, *p.i), 1, nmi('w', n, *p.i + 1), v}};
  }
}

std::vector<Edge> NonHausdorffGraph::edges_out_of(const std::string& v) const {
  if (!has_vertex(v)) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  auto p = *parse_id(v);
  long n = p.n;
  switch (p.letter) {
    case 'u': return {{nm('e', n - 1), 1, v, nm('u', n - 1)}};
    case 'v': return {{nm('f', n - 1), 1, v, nm('v', n - 1)}};
    default:
      if (*p.i == 0) return {{nm('g', n), 1, v, nm('u', n)}, {nm('h', n), 1, v, nm('v', n)}};
      return {{nmi('k', n, *p.i - 1), 1, v, nmi('w', n, *p.i - 1)}};
  }
}

std::pair<Edge, Edge> NonHausdorffGraph::factor(const Edge&, const Edge&) const {
  fail(ErrorCode::kColorOutOfRange, "a 1-graph has no factorization squares");
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Degree> parse_omega(const std::string& v, int k) {
  try {
    Degree d = Degree::parse(v);
    if (d.rank() != k || !d.nonnegative() || d.str() != v) return std::nullopt;
    return d;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string OmegaGraph::edge_id(const Degree& n, int color) { return n.str() + "+" + std::to_string(color); }

bool OmegaGraph::has_vertex(const std::string& v) const { return parse_omega(v, k_).has_value(); }

std::vector<Edge> OmegaGraph::edges_into(const std::string& v) const {
  auto n = parse_omega(v, k_);
  if (!n) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  std::vector<Edge> out;
  for (int c = 1; c <= k_; ++c) out.push_back(Edge{edge_id(*n, c), c, (*n + Degree::unit(k_, c)).str(), v});
  return out;
}

std::vector<Edge> OmegaGraph::edges_out_of(const std::string& v) const {
  auto n = parse_omega(v, k_);
  if (!n) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  std::vector<Edge> out;
  for (int c = 1; c <= k_; ++c) {
    if ((*n)[c - 1] == 0) continue;
    Degree m = *n - Degree::unit(k_, c);
    out.push_back(Edge{edge_id(m, c), c, v, m.str()});
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return out;
}

std::pair<Edge, Edge> OmegaGraph::factor(const Edge& e, const Edge& f) const {
  auto n = parse_omega(e.rng, k_);
  if (!n || e.src != f.rng || e.color >= f.color) fail(ErrorCode::kNotComposable, e.id + " and " + f.id);
  Degree mid = *n + Degree::unit(k_, f.color);
  Edge fp{edge_id(*n, f.color), f.color, mid.str(), e.rng};
  Edge ep{edge_id(mid, e.color), e.color, f.src, mid.str()};
  return {fp, ep};
}

// ---------------------------------------------------------------------------

std::vector<std::string> catalog_finite_names() {
  return {"B1", "B2", "B3", "pqr-7.1", "swap-14", "tricolour", "tricolour-12", "tricolour-23", "tricolour-13",
          "cycle4", "prop-3.21", "tree-fixture", "yb-3-swap"};
}

std::vector<std::string> catalog_lazy_names() { return {"lambda-E-4.5", "omega-1", "omega-2", "omega-3"}; }

CatalogEntry catalog(const std::string& name) {
  CatalogEntry out;
  out.name = name;
  auto finite = [&](Presentation p, std::string desc) {
    auto rep = validate_presentation(p);
    if (!rep.pass) fail(ErrorCode::kInternal, "catalog entry '" + name + "' is invalid: " + rep.detail);
    out.finite = std::move(p);
    out.description = std::move(desc);
    return out;
  };
  if (name.size() >= 2 && name[0] == 'B') {
    auto n = to_long(std::string_view(name).substr(1));
    if (n && *n >= 1 && *n <= 64) return finite(bouquet(static_cast<int>(*n)), "one vertex with n loops");
  }
  if (name == "pqr-7.1") return finite(pqr(), "one-vertex 2-graph whose edges a, b, c collapse in the groupoid");
  if (name == "swap-14") return finite(swap14(), "monoidal 2-graph embedding on edges but not on paths");
  if (name == "tricolour") return finite(tricolour(), "3-graph whose 2-coloured pieces embed but which does not");
  if (name == "tricolour-12") return finite(restrict_colors(tricolour(), {1, 2}), "blue-red piece of tricolour");
  if (name == "tricolour-23") return finite(restrict_colors(tricolour(), {2, 3}), "red-green piece of tricolour");
  if (name == "tricolour-13") return finite(restrict_colors(tricolour(), {1, 3}), "blue-green piece of tricolour");
  if (name == "cycle4") return finite(cycle4(), "singly connected 1-graph that is not simply connected");
  if (name == "prop-3.21") return finite(two_vertex_monoid(), "two-vertex 2-graph given by monoid relations");
  if (name == "tree-fixture") return finite(binary_tree(kTreeDepth), "binary tree rooted at t");
  if (name == "yb-3-swap")
    return finite(yang_baxter_graph(3, YangBaxterMap::permutation_type({1, 0})), "3-graph from the swap on two letters");
  if (name == "lambda-E-4.5") {
    out.lazy = std::make_shared<NonHausdorffGraph>();
    out.description = "Z-indexed 1-graph with non-Hausdorff orbit space";
    return out;
  }
  if (name.rfind("omega-", 0) == 0) {
    auto k = to_long(std::string_view(name).substr(6));
    if (k && *k >= 1 && *k <= 8) {
      out.lazy = std::make_shared<OmegaGraph>(static_cast<int>(*k));
      out.description = "the k-graph N^k";
      return out;
    }
  }
  fail(ErrorCode::kUnknownName, "no catalog entry named '" + name + "'");
}

}  // namespace hrg
