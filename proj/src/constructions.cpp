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

#include "hrg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hrg {

namespace {

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

// ---------------------------------------------------------------------------
// Cartesian product

Presentation cartesian_product(const Presentation& a, const Presentation& b) {
  int k = a.rank();
  std::vector<std::string> vertices;
  for (const auto& u : a.vertices())
    for (const auto& w : b.vertices()) vertices.push_back(pair_id(u, w));
  std::vector<Edge> edges;
  for (const Edge& e : a.edges())
    for (const auto& w : b.vertices())
      edges.push_back(Edge{pair_id(e.id, w), e.color, pair_id(e.src, w), pair_id(e.rng, w)});
  for (const auto& v : a.vertices())
    for (const Edge& f : b.edges())
      edges.push_back(Edge{pair_id(v, f.id), k + f.color, pair_id(v, f.src), pair_id(v, f.rng)});
  std::vector<Square> squares;
  for (const Square& s : a.squares())
    for (const auto& w : b.vertices())
      squares.push_back(
          Square{pair_id(s.i_edge, w), pair_id(s.j_edge, w), pair_id(s.j_prime, w), pair_id(s.i_prime, w)});
  for (const auto& v : a.vertices())
    for (const Square& s : b.squares())
      squares.push_back(
          Square{pair_id(v, s.i_edge), pair_id(v, s.j_edge), pair_id(v, s.j_prime), pair_id(v, s.i_prime)});
  // (e, r(f)) (s(e), f) = (r(e), f) (e, s(f))
  for (const Edge& e : a.edges())
    for (const Edge& f : b.edges())
      squares.push_back(Square{pair_id(e.id, f.rng), pair_id(e.src, f.id), pair_id(e.rng, f.id), pair_id(e.id, f.src)});
  return Presentation(k + b.rank(), std::move(vertices), std::move(edges), std::move(squares));
}

// ---------------------------------------------------------------------------
// Affine pullback

Presentation affine_pullback(const Presentation& p, const std::vector<Degree>& rows, const Degree& offset) {
  int k = p.rank();
  int l = static_cast<int>(rows.size());
  if (l < 1) fail(ErrorCode::kDegreeOutOfRange, "pullback needs at least one row");
  if (offset.rank() != k || !offset.nonnegative()) fail(ErrorCode::kDegreeOutOfRange, "offset must lie in N^k");
  for (const auto& r : rows)
    if (r.rank() != k || !r.nonnegative()) fail(ErrorCode::kDegreeOutOfRange, "each row must lie in N^k");

  auto label = [&p](const Morphism& m) {
    if (m.word.empty()) return "[" + p.vertex_name(m.range) + "]";
    return morphism_label(p, m);
  };
  auto vertex_id = [&](const Morphism& m) { return "(" + label(m) + ")"; };
  auto edge_id = [&](const Morphism& m, int color) { return "(" + label(m) + ",e" + std::to_string(color) + ")"; };

  std::vector<std::string> vertices;
  for (int u = 0; u < p.num_vertices(); ++u)
    for (const auto& m : morphisms_from(p, u, offset)) vertices.push_back(vertex_id(m));

  std::vector<std::vector<Morphism>> by_color(static_cast<std::size_t>(l));
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) {
    const Degree& a = rows[idx(i)];
    Degree full = a + offset;
    for (int u = 0; u < p.num_vertices(); ++u)
      for (auto& m : morphisms_from(p, u, full)) {
        Morphism rng = segment(p, m, Degree(k), offset);
        Morphism src = segment(p, m, a, full);
        edges.push_back(Edge{edge_id(m, i + 1), i + 1, vertex_id(src), vertex_id(rng)});
        by_color[idx(i)].push_back(std::move(m));
      }
  }

  std::vector<Square> squares;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const Degree& ai = rows[idx(i)];
      const Degree& aj = rows[idx(j)];
      Degree total = ai + aj + offset;
      for (const Morphism& lam : by_color[idx(i)]) {
        Morphism lam_src = segment(p, lam, ai, lam.degree);
        for (const Morphism& mu : by_color[idx(j)]) {
          if (segment(p, mu, Degree(k), offset) != lam_src) continue;
          Morphism head = segment(p, lam, Degree(k), ai);
          Morphism nu = compose(p, head, mu);
          Morphism mu2 = segment(p, nu, Degree(k), aj + offset);
          Morphism lam2 = segment(p, nu, aj, total);
          squares.push_back(Square{edge_id(lam, i + 1), edge_id(mu, j + 1), edge_id(mu2, j + 1), edge_id(lam2, i + 1)});
        }
      }
    }
  return Presentation(l, std::move(vertices), std::move(edges), std::move(squares));
}

// ---------------------------------------------------------------------------
// Skew products

SkewProduct::SkewProduct(Presentation base, Cocycle c) : base_(std::move(base)), c_(std::move(c)) {
  if (static_cast<int>(c_.labels().size()) != base_.num_edges())
    fail(ErrorCode::kNonFunctorialCocycle, "cocycle does not match the base presentation");
}

std::string SkewProduct::vertex_id(const GroupElem& g, int v) const {
  return c_.group().format(g) + "|" + base_.vertex_name(v);
}

std::string SkewProduct::edge_id(const GroupElem& g, int e) const {
  return c_.group().format(g) + "|" + base_.edge_name(e);
}

std::pair<GroupElem, int> SkewProduct::split_vertex(const std::string& id) const {
  auto bar = id.find('|');
  if (bar == std::string::npos) fail(ErrorCode::kMalformedInput, "not a skew-product vertex '" + id + "'");
  auto v = base_.find_vertex(id.substr(bar + 1));
  if (!v) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + id + "'");
  return {c_.group().parse(id.substr(0, bar)), *v};
}

std::pair<GroupElem, int> SkewProduct::split_edge(const std::string& id) const {
  auto bar = id.find('|');
  if (bar == std::string::npos) fail(ErrorCode::kMalformedInput, "not a skew-product edge '" + id + "'");
  auto e = base_.find_edge(id.substr(bar + 1));
  if (!e) fail(ErrorCode::kMalformedInput, "unknown edge '" + id + "'");
  return {c_.group().parse(id.substr(0, bar)), *e};
}

Edge SkewProduct::make_edge(const GroupElem& g, int e) const {
  return Edge{edge_id(g, e), base_.color(e), vertex_id(c_.group().multiply(g, c_.edge(e)), base_.src(e)),
              vertex_id(g, base_.rng(e))};
}

bool SkewProduct::has_vertex(const std::string& v) const {
  try {
    split_vertex(v);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Edge> SkewProduct::edges_into(const std::string& v) const {
  auto [g, x] = split_vertex(v);
  std::vector<Edge> out;
  for (int e : base_.in_edges(x)) out.push_back(make_edge(g, e));
  return out;
}

std::vector<Edge> SkewProduct::edges_out_of(const std::string& v) const {
  auto [h, x] = split_vertex(v);
  std::vector<Edge> out;
  for (int e : base_.out_edges(x)) out.push_back(make_edge(c_.group().multiply(h, c_.group().inverse(c_.edge(e))), e));
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return out;
}

std::pair<Edge, Edge> SkewProduct::factor(const Edge& e, const Edge& f) const {
  auto [g, be] = split_edge(e.id);
  auto [h, bf] = split_edge(f.id);
  if (h != c_.group().multiply(g, c_.edge(be))) fail(ErrorCode::kNotComposable, e.id + " and " + f.id);
  auto r = base_.forward(be, bf);
  if (!r) fail(ErrorCode::kWindowTooSmall, "base has no square for " + e.id + "." + f.id);
  GroupElem g2 = c_.group().multiply(g, c_.edge(r->first));
  return {make_edge(g, r->first), make_edge(g2, r->second)};
}

Presentation skew_product(const Presentation& base, const Cocycle& c, const GroupElem& seed, int radius) {
  SkewProduct sp(base, c);
  const Group& g = c.group();
  if (g.finite()) {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Square> squares;
    auto elements = g.elements();
    for (const auto& x : elements)
      for (int v = 0; v < base.num_vertices(); ++v) vertices.push_back(sp.vertex_id(x, v));
    for (const auto& x : elements)
      for (const Edge& e : base.edges()) {
        int ei = base.edge_index(e.id);
        edges.push_back(Edge{sp.edge_id(x, ei), e.color, sp.vertex_id(g.multiply(x, c.edge(ei)), base.src(ei)),
                             sp.vertex_id(x, base.rng(ei))});
      }
    for (const auto& x : elements)
      for (const auto& s : base.square_indices()) {
        GroupElem y = g.multiply(x, c.edge(s.i_edge));
        GroupElem z = g.multiply(x, c.edge(s.j_prime));
        squares.push_back(Square{sp.edge_id(x, s.i_edge), sp.edge_id(y, s.j_edge), sp.edge_id(x, s.j_prime),
                                 sp.edge_id(z, s.i_prime)});
      }
    return Presentation(base.rank(), std::move(vertices), std::move(edges), std::move(squares));
  }
  std::vector<std::string> seeds;
  for (int v = 0; v < base.num_vertices(); ++v) seeds.push_back(sp.vertex_id(seed, v));
  return window(sp, seeds, radius);
}

Presentation skew_quotient(const Presentation& w) {
  auto strip = [](const std::string& id) {
    auto bar = id.find('|');
    if (bar == std::string::npos) fail(ErrorCode::kNotASkewProduct, "id '" + id + "' has no group part");
    return id.substr(bar + 1);
  };
  std::vector<std::string> vertices;
  std::set<std::string> seen_v;
  for (const auto& v : w.vertices()) {
    std::string b = strip(v);
    if (seen_v.insert(b).second) vertices.push_back(b);
  }
  std::vector<Edge> edges;
  std::map<std::string, Edge> seen_e;
  for (const Edge& e : w.edges()) {
    Edge b{strip(e.id), e.color, strip(e.src), strip(e.rng)};
    auto [it, inserted] = seen_e.emplace(b.id, b);
    if (inserted) edges.push_back(b);
    else if (!(it->second == b)) fail(ErrorCode::kNotASkewProduct, "copies of edge '" + b.id + "' disagree");
  }
  std::vector<Square> squares;
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> seen_s;
  for (const Square& s : w.squares()) {
    Square b{strip(s.i_edge), strip(s.j_edge), strip(s.j_prime), strip(s.i_prime)};
    auto key = std::make_pair(b.i_edge, b.j_edge);
    auto val = std::make_pair(b.j_prime, b.i_prime);
    auto [it, inserted] = seen_s.emplace(key, val);
    if (inserted) squares.push_back(b);
    else if (it->second != val) fail(ErrorCode::kNotASkewProduct, "copies of a square disagree at " + b.i_edge + "." + b.j_edge);
  }
  return Presentation(w.rank(), std::move(vertices), std::move(edges), std::move(squares));
}

// ---------------------------------------------------------------------------
// Automorphisms, crossed products and action graphs

IndexAutomorphism resolve_automorphism(const Presentation& p, const Automorphism& a) {
  IndexAutomorphism out;
  int nv = p.num_vertices(), ne = p.num_edges();
  out.vertex.resize(idx(nv));
  out.edge.resize(idx(ne));
  for (int v = 0; v < nv; ++v) out.vertex[idx(v)] = v;
  for (int e = 0; e < ne; ++e) out.edge[idx(e)] = e;
  for (const auto& [from, to] : a.vertex) {
    auto x = p.find_vertex(from), y = p.find_vertex(to);
    if (!x || !y) fail(ErrorCode::kNotAnAutomorphism, "unknown vertex in map: " + from + " -> " + to);
    out.vertex[idx(*x)] = *y;
  }
  for (const auto& [from, to] : a.edge) {
    auto x = p.find_edge(from), y = p.find_edge(to);
    if (!x || !y) fail(ErrorCode::kNotAnAutomorphism, "unknown edge in map: " + from + " -> " + to);
    out.edge[idx(*x)] = *y;
  }
  out.vertex_inv.assign(idx(nv), -1);
  out.edge_inv.assign(idx(ne), -1);
  for (int v = 0; v < nv; ++v) {
    int& slot = out.vertex_inv[idx(out.vertex[idx(v)])];
    if (slot >= 0) fail(ErrorCode::kNotAnAutomorphism, "vertex map is not injective");
    slot = v;
  }
  for (int e = 0; e < ne; ++e) {
    int& slot = out.edge_inv[idx(out.edge[idx(e)])];
    if (slot >= 0) fail(ErrorCode::kNotAnAutomorphism, "edge map is not injective");
    slot = e;
  }
  for (int e = 0; e < ne; ++e) {
    int f = out.edge[idx(e)];
    if (p.color(f) != p.color(e) || p.src(f) != out.vertex[idx(p.src(e))] || p.rng(f) != out.vertex[idx(p.rng(e))])
      fail(ErrorCode::kNotAnAutomorphism, "edge '" + p.edge_name(e) + "' is not mapped compatibly");
  }
  for (const auto& s : p.square_indices()) {
    auto img = p.forward(out.edge[idx(s.i_edge)], out.edge[idx(s.j_edge)]);
    if (!img || img->first != out.edge[idx(s.j_prime)] || img->second != out.edge[idx(s.i_prime)])
      fail(ErrorCode::kNotAnAutomorphism,
           "square at " + p.edge_name(s.i_edge) + "." + p.edge_name(s.j_edge) + " is not preserved");
  }
  return out;
}

Presentation crossed_product(const Presentation& p, const std::vector<Automorphism>& alphas) {
  int k = p.rank();
  int l = static_cast<int>(alphas.size());
  std::vector<IndexAutomorphism> a;
  for (const auto& x : alphas) a.push_back(resolve_automorphism(p, x));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      for (int v = 0; v < p.num_vertices(); ++v)
        if (a[idx(i)].vertex[idx(a[idx(j)].vertex[idx(v)])] != a[idx(j)].vertex[idx(a[idx(i)].vertex[idx(v)])])
          fail(ErrorCode::kAutomorphismsDontCommute, "at vertex '" + p.vertex_name(v) + "'");
      for (int e = 0; e < p.num_edges(); ++e)
        if (a[idx(i)].edge[idx(a[idx(j)].edge[idx(e)])] != a[idx(j)].edge[idx(a[idx(i)].edge[idx(e)])])
          fail(ErrorCode::kAutomorphismsDontCommute, "at edge '" + p.edge_name(e) + "'");
    }
  auto old_id = [&p](int e) { return "(" + p.edge_name(e) + ",0)"; };
  auto new_id = [&p](int v, int j) { return "(" + p.vertex_name(v) + ",e" + std::to_string(j + 1) + ")"; };

  std::vector<Edge> edges;
  for (int e = 0; e < p.num_edges(); ++e)
    edges.push_back(Edge{old_id(e), p.color(e), p.vertex_name(p.src(e)), p.vertex_name(p.rng(e))});
  for (int j = 0; j < l; ++j)
    for (int v = 0; v < p.num_vertices(); ++v)
      edges.push_back(Edge{new_id(v, j), k + j + 1, p.vertex_name(a[idx(j)].vertex_inv[idx(v)]), p.vertex_name(v)});
  std::vector<Square> squares;
  for (const auto& s : p.square_indices())
    squares.push_back(Square{old_id(s.i_edge), old_id(s.j_edge), old_id(s.j_prime), old_id(s.i_prime)});
  // (e,0)(s(e),e_j) = (r(e),e_j)(alpha_j^{-1}(e),0)
  for (int j = 0; j < l; ++j)
    for (int e = 0; e < p.num_edges(); ++e)
      squares.push_back(Square{old_id(e), new_id(p.src(e), j), new_id(p.rng(e), j), old_id(a[idx(j)].edge_inv[idx(e)])});
  // (v,e_i)(alpha_i^{-1}v, e_j) = (v,e_j)(alpha_j^{-1}v, e_i)
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int v = 0; v < p.num_vertices(); ++v)
        squares.push_back(Square{new_id(v, i), new_id(a[idx(i)].vertex_inv[idx(v)], j), new_id(v, j),
                                 new_id(a[idx(j)].vertex_inv[idx(v)], i)});
  return Presentation(k + l, p.vertices(), std::move(edges), std::move(squares));
}

Presentation action_graph(int n, const Presentation& p, const std::vector<Automorphism>& alphas) {
  if (n < 1 || static_cast<int>(alphas.size()) != n)
    fail(ErrorCode::kMalformedInput, "action graph needs one automorphism per loop of B_n");
  std::vector<IndexAutomorphism> a;
  for (const auto& x : alphas) a.push_back(resolve_automorphism(p, x));
  auto loop_id = [&p](int i, int v) { return "(f" + std::to_string(i + 1) + "," + p.vertex_name(v) + ")"; };

  std::vector<Edge> edges;
  // r(f_i, v) = alpha_{f_i}(v), s(f_i, v) = v.
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < p.num_vertices(); ++v)
      edges.push_back(Edge{loop_id(i, v), 1, p.vertex_name(v), p.vertex_name(a[idx(i)].vertex[idx(v)])});
  for (const Edge& e : p.edges()) edges.push_back(Edge{e.id, e.color + 1, e.src, e.rng});
  std::vector<Square> squares;
  // (f_i, r(e)) (u, e) = (u, alpha_{f_i}(e)) (f_i, s(e))
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < p.num_edges(); ++e)
      squares.push_back(Square{loop_id(i, p.rng(e)), p.edge_name(e), p.edge_name(a[idx(i)].edge[idx(e)]), loop_id(i, p.src(e))});
  for (const Square& s : p.squares()) squares.push_back(s);
  Presentation out(p.rank() + 1, p.vertices(), std::move(edges), std::move(squares));
  auto rep = validate_presentation(out);
  if (!rep.pass) fail(ErrorCode::kInternal, "action graph failed validation: " + rep.detail);
  return out;
}

// ---------------------------------------------------------------------------
// Monoidal 2-graphs and Yang-Baxter graphs

Presentation monoidal_2graph(int n1, int n2, const std::vector<std::pair<int, int>>& theta) {
  if (n1 < 1 || n2 < 1 || static_cast<int>(theta.size()) != n1 * n2)
    fail(ErrorCode::kNotABijection, "theta must have n1*n2 entries");
  std::set<std::pair<int, int>> image;
  for (const auto& [jp, ip] : theta) {
    if (jp < 1 || jp > n2 || ip < 1 || ip > n1) fail(ErrorCode::kNotABijection, "theta value out of range");
    if (!image.emplace(jp, ip).second)
      fail(ErrorCode::kNotABijection, "theta hits (" + std::to_string(jp) + "," + std::to_string(ip) + ") twice");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n1; ++i) edges.push_back(Edge{"e" + std::to_string(i), 1, "v", "v"});
  for (int j = 1; j <= n2; ++j) edges.push_back(Edge{"f" + std::to_string(j), 2, "v", "v"});
  std::vector<Square> squares;
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j) {
      auto [jp, ip] = theta[idx((i - 1) * n2 + (j - 1))];
      squares.push_back(Square{"e" + std::to_string(i), "f" + std::to_string(j), "f" + std::to_string(jp),
                               "e" + std::to_string(ip)});
    }
  return Presentation(2, {"v"}, std::move(edges), std::move(squares));
}

YangBaxterMap YangBaxterMap::permutation_type(const std::vector<int>& sigma) {
  YangBaxterMap m;
  m.n = static_cast<int>(sigma.size());
  for (int e = 0; e < m.n; ++e)
    for (int f = 0; f < m.n; ++f) m.r.emplace_back(sigma[idx(f)], e);
  return m;
}

void check_yang_baxter(const YangBaxterMap& r) {
  int n = r.n;
  if (n < 1 || static_cast<int>(r.r.size()) != n * n) fail(ErrorCode::kNotABijection, "R must have n^2 entries");
  std::set<std::pair<int, int>> image;
  for (const auto& v : r.r) {
    if (v.first < 0 || v.first >= n || v.second < 0 || v.second >= n)
      fail(ErrorCode::kNotABijection, "R value out of range");
    if (!image.insert(v).second) fail(ErrorCode::kNotABijection, "R is not injective");
  }
  auto R = [&](int a, int b) { return r.r[idx(a * n + b)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // Apply right to left: (R x id)(id x R)(R x id).
        auto [a1, b1] = R(x, y);
        auto [b2, c2] = R(b1, z);
        auto [a3, b3] = R(a1, b2);
        auto [q1, r1] = R(y, z);
        auto [p2, q2] = R(x, q1);
        auto [q3, r3] = R(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3)
          fail(ErrorCode::kNotYangBaxter, "braid relation fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                              "," + std::to_string(z) + ")");
      }
}

Presentation yang_baxter_graph(int k, const YangBaxterMap& r) {
  if (k < 2) fail(ErrorCode::kMalformedInput, "Yang-Baxter graphs need k >= 2");
  check_yang_baxter(r);
  auto id = [](int i, int x) { return "(" + std::to_string(i) + "," + std::to_string(x + 1) + ")"; };
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i)
    for (int x = 0; x < r.n; ++x) edges.push_back(Edge{id(i, x), i, "v", "v"});
  std::vector<Square> squares;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int e = 0; e < r.n; ++e)
        for (int f = 0; f < r.n; ++f) {
          auto [fp, ep] = r.r[idx(e * r.n + f)];
          squares.push_back(Square{id(i, e), id(j, f), id(j, fp), id(i, ep)});
        }
  Presentation out(k, {"v"}, std::move(edges), std::move(squares));
  auto rep = validate_presentation(out);
  if (!rep.pass) fail(ErrorCode::kNotYangBaxter, "hexagon check failed: " + rep.detail);
  return out;
}

// ---------------------------------------------------------------------------
// Color manipulation

Presentation permute_colors(const Presentation& p, const std::vector<int>& perm) {
  int k = p.rank();
  if (static_cast<int>(perm.size()) != k) fail(ErrorCode::kColorOutOfRange, "permutation has the wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int c = 1; c <= k; ++c)
    if (sorted[idx(c - 1)] != c) fail(ErrorCode::kColorOutOfRange, "not a permutation of the colors");
  std::vector<Edge> edges = p.edges();
  for (Edge& e : edges) e.color = perm[idx(e.color - 1)];
  std::vector<Square> squares;
  for (const auto& s : p.square_indices()) {
    const Square& q = p.squares()[squares.size()];
    if (perm[idx(p.color(s.i_edge) - 1)] < perm[idx(p.color(s.j_edge) - 1)]) squares.push_back(q);
    else squares.push_back(Square{q.j_prime, q.i_prime, q.i_edge, q.j_edge});
  }
  return Presentation(k, p.vertices(), std::move(edges), std::move(squares));
}

Presentation restrict_colors(const Presentation& p, const std::vector<int>& colors) {
  std::map<int, int> renum;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1 || colors[i] > p.rank()) fail(ErrorCode::kColorOutOfRange, "color out of range");
    if (!renum.emplace(colors[i], static_cast<int>(i) + 1).second) fail(ErrorCode::kColorOutOfRange, "repeated color");
  }
  std::vector<Edge> edges;
  for (const Edge& e : p.edges())
    if (renum.count(e.color)) edges.push_back(Edge{e.id, renum[e.color], e.src, e.rng});
  std::vector<Square> squares;
  for (std::size_t n = 0; n < p.squares().size(); ++n) {
    const auto& s = p.square_indices()[n];
    const Square& q = p.squares()[n];
    auto ci = renum.find(p.color(s.i_edge));
    auto cj = renum.find(p.color(s.j_edge));
    if (ci == renum.end() || cj == renum.end()) continue;
    if (ci->second < cj->second) squares.push_back(q);
    else squares.push_back(Square{q.j_prime, q.i_prime, q.i_edge, q.j_edge});
  }
  return Presentation(static_cast<int>(colors.size()), p.vertices(), std::move(edges), std::move(squares));
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

class IsoSearch {
 public:
  IsoSearch(const Presentation& a, const Presentation& b) : a_(a), b_(b) {}

  std::optional<Isomorphism> run() {
    if (a_.rank() != b_.rank() || a_.num_vertices() != b_.num_vertices() || a_.num_edges() != b_.num_edges() ||
        a_.squares().size() != b_.squares().size())
      return std::nullopt;
    sig_a_ = signatures(a_);
    sig_b_ = signatures(b_);
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    vmap_.assign(idx(a_.num_vertices()), -1);
    vused_.assign(idx(b_.num_vertices()), 0);
    // Order vertices by BFS so that adjacency constraints bite early.
    order_ = bfs_order(a_);
    if (!assign_vertex(0)) return std::nullopt;
    Isomorphism iso;
    for (int v = 0; v < a_.num_vertices(); ++v) iso.vertex[a_.vertex_name(v)] = b_.vertex_name(vmap_[idx(v)]);
    for (int e = 0; e < a_.num_edges(); ++e) iso.edge[a_.edge_name(e)] = b_.edge_name(emap_[idx(e)]);
    return iso;
  }

 private:
  static std::vector<std::vector<int>> signatures(const Presentation& p) {
    std::vector<std::vector<int>> s(idx(p.num_vertices()), std::vector<int>(idx(2 * p.rank() + 1), 0));
    for (int e = 0; e < p.num_edges(); ++e) {
      ++s[idx(p.rng(e))][idx(p.color(e) - 1)];
      ++s[idx(p.src(e))][idx(p.rank() + p.color(e) - 1)];
      if (p.src(e) == p.rng(e)) ++s[idx(p.src(e))][idx(2 * p.rank())];
    }
    return s;
  }

  static std::vector<int> bfs_order(const Presentation& p) {
    std::vector<int> order;
    std::vector<char> seen(idx(p.num_vertices()), 0);
    for (int root = 0; root < p.num_vertices(); ++root) {
      if (seen[idx(root)]) continue;
      seen[idx(root)] = 1;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        int v = order[head++];
        auto visit = [&](int w) {
          if (!seen[idx(w)]) {
            seen[idx(w)] = 1;
            order.push_back(w);
          }
        };
        for (int e : p.in_edges(v)) visit(p.src(e));
        for (int e : p.out_edges(v)) visit(p.rng(e));
      }
    }
    return order;
  }

  bool vertex_consistent(int v) const {
    int w = vmap_[idx(v)];
    // Edge counts per color between v and already-mapped vertices must match.
    std::map<std::pair<int, int>, int> ca, cb;
    for (int e : a_.in_edges(v))
      if (vmap_[idx(a_.src(e))] >= 0) ++ca[{vmap_[idx(a_.src(e))], a_.color(e)}];
    for (int e : b_.in_edges(w))
      if (vused_[idx(b_.src(e))]) ++cb[{b_.src(e), b_.color(e)}];
    if (ca != cb) return false;
    ca.clear();
    cb.clear();
    for (int e : a_.out_edges(v))
      if (vmap_[idx(a_.rng(e))] >= 0) ++ca[{vmap_[idx(a_.rng(e))], a_.color(e)}];
    for (int e : b_.out_edges(w))
      if (vused_[idx(b_.rng(e))]) ++cb[{b_.rng(e), b_.color(e)}];
    return ca == cb;
  }

  bool assign_vertex(std::size_t pos) {
    if (pos == order_.size()) return assign_edges();
    int v = order_[pos];
    for (int w = 0; w < b_.num_vertices(); ++w) {
      if (vused_[idx(w)] || sig_a_[idx(v)] != sig_b_[idx(w)]) continue;
      vmap_[idx(v)] = w;
      vused_[idx(w)] = 1;
      if (vertex_consistent(v) && assign_vertex(pos + 1)) return true;
      vmap_[idx(v)] = -1;
      vused_[idx(w)] = 0;
    }
    return false;
  }

  bool assign_edges() {
    emap_.assign(idx(a_.num_edges()), -1);
    eused_.assign(idx(b_.num_edges()), 0);
    // Squares touching each edge, to check as soon as all four are mapped.
    touching_.assign(idx(a_.num_edges()), {});
    for (std::size_t n = 0; n < a_.square_indices().size(); ++n) {
      const auto& s = a_.square_indices()[n];
      for (int e : {s.i_edge, s.j_edge, s.j_prime, s.i_prime}) touching_[idx(e)].push_back(n);
    }
    return assign_edge(0);
  }

  bool squares_ok(int e) const {
    for (std::size_t n : touching_[idx(e)]) {
      const auto& s = a_.square_indices()[n];
      int i = emap_[idx(s.i_edge)], j = emap_[idx(s.j_edge)], jp = emap_[idx(s.j_prime)], ip = emap_[idx(s.i_prime)];
      if (i >= 0 && j >= 0) {
        auto img = b_.forward(i, j);
        if (!img) return false;
        if (jp >= 0 && img->first != jp) return false;
        if (ip >= 0 && img->second != ip) return false;
      }
      if (jp >= 0 && ip >= 0) {
        auto pre = b_.backward(jp, ip);
        if (!pre) return false;
        if (i >= 0 && pre->first != i) return false;
        if (j >= 0 && pre->second != j) return false;
      }
    }
    return true;
  }

  bool assign_edge(int e) {
    if (e == a_.num_edges()) return true;
    int src = vmap_[idx(a_.src(e))];
    int rng = vmap_[idx(a_.rng(e))];
    for (int f : b_.in_edges(rng)) {
      if (eused_[idx(f)] || b_.src(f) != src || b_.color(f) != a_.color(e)) continue;
      emap_[idx(e)] = f;
      eused_[idx(f)] = 1;
      if (squares_ok(e) && assign_edge(e + 1)) return true;
      emap_[idx(e)] = -1;
      eused_[idx(f)] = 0;
    }
    return false;
  }

  const Presentation& a_;
  const Presentation& b_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<int> order_, vmap_, emap_;
  std::vector<char> vused_, eused_;
  std::vector<std::vector<std::size_t>> touching_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Presentation& a, const Presentation& b) {
  return IsoSearch(a, b).run();
}

}  // namespace hrg
