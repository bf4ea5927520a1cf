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

#include "hrg/a2.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hrg/error.hpp"

namespace hrg {

namespace {

int point_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }
int pos(int x) { return x + 1; }
int neg(int x) { return -(x + 1); }

std::string letter_text(int letter) {
  std::string s = "a" + std::to_string(point_of(letter));
  if (letter < 0) s += "^-1";
  return s;
}

int letter_key(int letter) { return 2 * point_of(letter) + (letter < 0 ? 1 : 0); }

bool shortlex_less(const SignedWord& a, const SignedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  return false;
}

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

bool ProjectivePlane::incident(int point, int line) const {
  const auto& l = lines[static_cast<std::size_t>(line)];
  return std::binary_search(l.begin(), l.end(), point);
}

PlaneReport validate_plane(const ProjectivePlane& plane) {
  PlaneReport rep;
  auto bad = [&](std::string what, std::vector<int> witness) {
    rep.ok = false;
    rep.failure = std::move(what);
    rep.witness = std::move(witness);
    return rep;
  };
  const int q = plane.q;
  const int n = q * q + q + 1;
  if (q < 2 || plane.size() != n) return bad("wrong number of lines", {plane.size()});
  for (int l = 0; l < n; ++l) {
    const auto& pts = plane.lines[static_cast<std::size_t>(l)];
    if (static_cast<int>(pts.size()) != q + 1) return bad("line size is not q+1", {l});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 0 || pts[i] >= n) return bad("point out of range", {l});
      if (i && pts[i] <= pts[i - 1]) return bad("line not sorted or repeated point", {l});
    }
  }
  // Two points, one line.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int common = 0;
      for (int l = 0; l < n; ++l)
        if (plane.incident(a, l) && plane.incident(b, l)) ++common;
      if (common != 1) return bad("points not on exactly one common line", {a, b});
    }
  // Two lines, one point.
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m) {
      int common = 0;
      for (int p : plane.lines[static_cast<std::size_t>(l)])
        if (plane.incident(p, m)) ++common;
      if (common != 1) return bad("lines not meeting in exactly one point", {l, m});
    }
  auto collinear = [&](int a, int b, int c) {
    for (int l = 0; l < n; ++l)
      if (plane.incident(a, l) && plane.incident(b, l) && plane.incident(c, l)) return true;
    return false;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (collinear(a, b, c)) continue;
        for (int d = c + 1; d < n; ++d)
          if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d)) return rep;
      }
  return bad("no quadrilateral", {});
}

ProjectivePlane build_plane(int q) {
  if (q != 2 && q != 3) fail(ErrorCode::kUnsupportedOrder, "projective planes of order " + std::to_string(q) + " are not supported");
  // Normalized vectors of F_q^3: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = a ? a : (b ? b : c);
        if (lead == 1) pts.push_back(v);
      }
  ProjectivePlane plane;
  plane.q = q;
  for (const auto& l : pts) {
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int dot = l[0] * pts[i][0] + l[1] * pts[i][1] + l[2] * pts[i][2];
      if (dot % q == 0) on.push_back(static_cast<int>(i));
    }
    plane.lines.push_back(on);
  }
  auto rep = validate_plane(plane);
  if (!rep.ok) fail(ErrorCode::kInternal, "field plane failed validation: " + rep.failure);
  return plane;
}

ProjectivePlane cyclic_fano_plane() {
  ProjectivePlane plane;
  plane.q = 2;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> l{(i + 1) % 7, (i + 2) % 7, (i + 4) % 7};
    std::sort(l.begin(), l.end());
    plane.lines.push_back(l);
  }
  return plane;
}

Triella::Triella(ProjectivePlane plane, std::vector<int> lambda, std::set<Triple> triples)
    : plane_(std::move(plane)), lambda_(std::move(lambda)), triples_(std::move(triples)) {
  auto rep = validate_plane(plane_);
  if (!rep.ok) {
    std::string w;
    for (int x : rep.witness) w += " " + std::to_string(x);
    fail(ErrorCode::kTriellaAxiomViolation, "plane: " + rep.failure + (w.empty() ? "" : " at" + w));
  }
  const int n = plane_.size();
  if (static_cast<int>(lambda_.size()) != n) fail(ErrorCode::kMalformedInput, "lambda must have one line per point");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int l : lambda_) {
    if (l < 0 || l >= n) fail(ErrorCode::kMalformedInput, "lambda line out of range");
    if (hit[static_cast<std::size_t>(l)]) fail(ErrorCode::kMalformedInput, "lambda is not a bijection");
    hit[static_cast<std::size_t>(l)] = 1;
  }
  for (const auto& t : triples_)
    for (int x : t)
      if (x < 0 || x >= n) fail(ErrorCode::kMalformedInput, "triple point out of range");

  const auto nn = static_cast<std::size_t>(n * n);
  in_lambda_.assign(nn, 0);
  third_.assign(nn, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) in_lambda_[idx(x, y)] = plane_.incident(y, lambda_[static_cast<std::size_t>(x)]);

  for (const auto& [x, y, z] : triples_) {
    if (third_[idx(x, y)] != -1)
      fail(ErrorCode::kTriellaAxiomViolation, "(T3) two triples start with " + pair_text(x, y));
    third_[idx(x, y)] = z;
  }
  for (const auto& [x, y, z] : triples_) {
    if (!triples_.count({y, z, x}))
      fail(ErrorCode::kTriellaAxiomViolation, "(T2) rotation of (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                  std::to_string(z) + ") missing");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((third_[idx(x, y)] != -1) != static_cast<bool>(in_lambda_[idx(x, y)]))
        fail(ErrorCode::kTriellaAxiomViolation, "(T1) fails for " + pair_text(x, y));

  // Swap tables. Right: z with x, y in lambda(z). Left: z' in lambda(x) and lambda(y).
  std::vector<int> lambda_inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) lambda_inv[static_cast<std::size_t>(lambda_[static_cast<std::size_t>(x)])] = x;
  right_swap_.assign(nn, {-1, -1});
  left_swap_.assign(nn, {-1, -1});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int line = -1;
      for (int l = 0; l < n; ++l)
        if (plane_.incident(x, l) && plane_.incident(y, l)) line = l;
      int z = lambda_inv[static_cast<std::size_t>(line)];
      right_swap_[idx(x, y)] = {third_[idx(z, x)], third_[idx(z, y)]};
      int zp = -1;
      for (int p : plane_.lines[static_cast<std::size_t>(lambda_[static_cast<std::size_t>(x)])])
        if (in_lambda_[idx(y, p)]) zp = p;
      left_swap_[idx(x, y)] = {third_[idx(x, zp)], third_[idx(y, zp)]};
    }
}

Triella Triella::preset_a1() {
  std::vector<int> lambda(7);
  for (int i = 0; i < 7; ++i) lambda[static_cast<std::size_t>(i)] = i;  // line i is {i+1, i+2, i+4}
  std::set<Triple> t;
  for (int i = 0; i < 7; ++i) {
    Triple base{i, (i + 1) % 7, (i + 3) % 7};
    t.insert(base);
    t.insert({base[1], base[2], base[0]});
    t.insert({base[2], base[0], base[1]});
  }
  return Triella(cyclic_fano_plane(), lambda, t);
}

Triella Triella::preset(const std::string& name) {
  if (name == "A1") return preset_a1();
  fail(ErrorCode::kUnknownName, "unknown triella preset '" + name + "'");
}

SignedWord parse_signed_word(const Triella& t, const std::string& text) {
  SignedWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::size_t i = 0;
    while (i < tok.size()) {
      if (tok[i] != 'a') fail(ErrorCode::kMalformedInput, "bad letter in '" + tok + "'");
      std::size_t j = i + 1;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      if (j == i + 1) fail(ErrorCode::kMalformedInput, "bad letter in '" + tok + "'");
      int x = std::stoi(tok.substr(i + 1, j - i - 1));
      if (x >= t.points()) fail(ErrorCode::kMalformedInput, "point a" + std::to_string(x) + " not in the plane");
      int sign = 1;
      if (tok.compare(j, 3, "^-1") == 0) {
        sign = -1;
        j += 3;
      }
      w.push_back(sign * (x + 1));
      i = j;
    }
  }
  return w;
}

std::string format_signed_word(const SignedWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += letter_text(w[i]);
  }
  return s;
}

std::string compact_word(const SignedWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int l : w) s += letter_text(l);
  return s;
}

namespace {

// Appends one letter to an irreducible right-form word, keeping it irreducible.
void push_right(const Triella& t, SignedWord& st, int g) {
  if (g < 0) {
    int y = point_of(g);
    if (!st.empty()) {
      int top = st.back();
      if (top == pos(y)) {
        st.pop_back();
        return;
      }
      if (top < 0 && t.in_lambda(y, point_of(top))) {
        st.pop_back();
        push_right(t, st, pos(t.third(y, point_of(top))));
        return;
      }
    }
    st.push_back(g);
    return;
  }
  int x = point_of(g);
  if (!st.empty()) {
    int top = st.back();
    if (top < 0) {
      int y = point_of(top);
      st.pop_back();
      if (y == x) return;
      auto [s, u] = t.right_swap(y, x);
      push_right(t, st, pos(s));
      push_right(t, st, neg(u));
      return;
    }
    if (t.in_lambda(point_of(top), x)) {
      st.pop_back();
      push_right(t, st, neg(t.third(point_of(top), x)));
      return;
    }
  }
  st.push_back(g);
}

// Mirror image: prepends one letter to an irreducible left-form word, which
// is stored reversed so the front is at the back of the vector.
void push_left(const Triella& t, SignedWord& rev, int g) {
  if (g > 0) {
    int x = point_of(g);
    if (!rev.empty()) {
      int front = rev.back();
      if (front == neg(x)) {
        rev.pop_back();
        return;
      }
      if (front > 0 && t.in_lambda(x, point_of(front))) {
        rev.pop_back();
        push_left(t, rev, neg(t.third(x, point_of(front))));
        return;
      }
      if (front < 0) {
        auto [s, u] = t.left_swap(x, point_of(front));
        rev.pop_back();
        push_left(t, rev, pos(u));
        push_left(t, rev, neg(s));
        return;
      }
    }
    rev.push_back(g);
    return;
  }
  int y = point_of(g);
  if (!rev.empty()) {
    int front = rev.back();
    if (front == pos(y)) {
      rev.pop_back();
      return;
    }
    if (front < 0 && t.in_lambda(point_of(front), y)) {
      rev.pop_back();
      push_left(t, rev, pos(t.third(point_of(front), y)));
      return;
    }
  }
  rev.push_back(g);
}

}  // namespace

SignedWord normalize(const Triella& t, const SignedWord& w, NormalSide side) {
  SignedWord st;
  st.reserve(w.size() + 4);
  if (side == NormalSide::kRight) {
    for (int g : w) push_right(t, st, g);
    return st;
  }
  for (auto it = w.rbegin(); it != w.rend(); ++it) push_left(t, st, *it);
  std::reverse(st.begin(), st.end());
  return st;
}

SignedWord normalize_traced(const Triella& t, const SignedWord& input, NormalSide side,
                            const std::function<void(const RewriteStep&)>& on_step) {
  SignedWord w = input;
  const bool right = side == NormalSide::kRight;
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) {
      int g = w[i], h = w[i + 1];
      SignedWord rep;
      std::string rule;
      if (g == -h) {
        rule = "cancel";
      } else if (g > 0 && h > 0 && t.in_lambda(point_of(g), point_of(h))) {
        rule = "contract+";
        rep = {neg(t.third(point_of(g), point_of(h)))};
      } else if (g < 0 && h < 0 && t.in_lambda(point_of(h), point_of(g))) {
        rule = "contract-";
        rep = {pos(t.third(point_of(h), point_of(g)))};
      } else if (right && g < 0 && h > 0) {
        auto [s, u] = t.right_swap(point_of(g), point_of(h));
        rule = "swap";
        rep = {pos(s), neg(u)};
      } else if (!right && g > 0 && h < 0) {
        auto [s, u] = t.left_swap(point_of(g), point_of(h));
        rule = "swap";
        rep = {neg(s), pos(u)};
      } else {
        continue;
      }
      RewriteStep step{rule, i, w, {}};
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), rep.begin(), rep.end());
      step.after = w;
      if (on_step) on_step(step);
      changed = true;
    }
    if (!changed) return w;
  }
}

Degree shape_of_normal(const SignedWord& normal) {
  int m = 0, n = 0;
  for (int l : normal) (l > 0 ? m : n)++;
  return Degree{m, n};
}

bool operator<(const A2Element& a, const A2Element& b) { return shortlex_less(a.word, b.word); }

A2Element A2Ops::element(const SignedWord& w) const {
  A2Element e;
  e.word = normalize(*t_, w);
  e.shape = shape_of_normal(e.word);
  return e;
}

A2Element A2Ops::multiply(const A2Element& a, const A2Element& b) const {
  A2Element e;
  e.word = a.word;
  for (int g : b.word) push_right(*t_, e.word, g);
  e.shape = shape_of_normal(e.word);
  return e;
}

A2Element A2Ops::inverse(const A2Element& a) const {
  SignedWord w(a.word.rbegin(), a.word.rend());
  for (int& g : w) g = -g;
  return element(w);
}

std::pair<A2Element, A2Element> A2Ops::unique_factorize(const A2Element& w, const Degree& m, const Degree& n) const {
  if (m.rank() != 2 || n.rank() != 2 || !m.nonnegative() || !n.nonnegative() || m + n != w.shape)
    fail(ErrorCode::kShapeMismatch, "shape " + w.shape.str() + " is not " + m.str() + " + " + n.str());
  // Left peels: negatives first, then positives, as in the left normal form.
  SignedWord h;
  A2Element rest = w;
  auto peel = [&](int sign) {
    Degree target = rest.shape - (sign > 0 ? Degree{1, 0} : Degree{0, 1});
    int found = -1;
    A2Element next;
    for (int x = 0; x < t_->points(); ++x) {
      A2Element cand = multiply(letter(x, -sign), rest);
      if (cand.shape == target) {
        if (found != -1) fail(ErrorCode::kInternal, "two left peels for " + format_signed_word(w.word));
        found = x;
        next = cand;
      }
    }
    if (found == -1) fail(ErrorCode::kInternal, "no left peel for " + format_signed_word(w.word));
    h.push_back(sign * (found + 1));
    rest = next;
  };
  for (int i = 0; i < m[1]; ++i) peel(-1);
  for (int i = 0; i < m[0]; ++i) peel(1);
  return {element(h), rest};
}

A2Ops::UnitMaps A2Ops::unit_maps(const A2Element& w) const {
  const Degree one{1, 1};
  if (!one.le(w.shape)) fail(ErrorCode::kShapeTooSmall, "shape " + w.shape.str() + " is not >= (1,1)");
  UnitMaps u;
  auto [b, d] = unique_factorize(w, one, w.shape - one);
  auto [c, a] = unique_factorize(w, w.shape - one, one);
  u.r_unit = b;
  u.d_part = d;
  u.c_part = c;
  u.s_unit = a;
  return u;
}

std::vector<A2Element> A2Ops::elements_of_shape(const Degree& shape) const {
  const int m = shape[0], n = shape[1];
  const int np = t_->points();
  std::vector<SignedWord> positives{{}}, negatives{{}};
  for (int i = 0; i < m; ++i) {
    std::vector<SignedWord> next;
    for (const auto& w : positives)
      for (int x = 0; x < np; ++x) {
        if (!w.empty() && t_->in_lambda(point_of(w.back()), x)) continue;
        auto v = w;
        v.push_back(pos(x));
        next.push_back(std::move(v));
      }
    positives = std::move(next);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<SignedWord> next;
    for (const auto& w : negatives)
      for (int y = 0; y < np; ++y) {
        if (!w.empty() && t_->in_lambda(y, point_of(w.back()))) continue;  // y_j not in lambda(y_{j+1})
        auto v = w;
        v.push_back(neg(y));
        next.push_back(std::move(v));
      }
    negatives = std::move(next);
  }
  std::vector<A2Element> out;
  for (const auto& p : positives)
    for (const auto& q : negatives) {
      if (!p.empty() && !q.empty() && p.back() == -q.front()) continue;
      A2Element e;
      e.word = p;
      e.word.insert(e.word.end(), q.begin(), q.end());
      e.shape = shape;
      out.push_back(std::move(e));
    }
  std::sort(out.begin(), out.end());
  return out;
}

GroupElem A2Group::multiply(const GroupElem& a, const GroupElem& b) const {
  return ops_.multiply(ops_.element(a), ops_.element(b)).word;
}

GroupElem A2Group::inverse(const GroupElem& a) const { return ops_.inverse(ops_.element(a)).word; }

GroupElem A2Group::parse(const std::string& text) const {
  return ops_.element(parse_signed_word(ops_.triella(), text)).word;
}

LambdaT lambda_t(const A2Ops& ops) {
  LambdaT out;
  out.group = std::make_shared<A2Group>(ops);
  std::vector<std::string> vertices;
  for (const auto& v : ops.elements_of_shape({1, 1})) {
    vertices.push_back(compact_word(v.word));
    out.element[vertices.back()] = v;
  }
  std::vector<Edge> edges;
  std::map<std::string, GroupElem> b_labels, c_labels;
  for (int color = 1; color <= 2; ++color) {
    Degree shape = color == 1 ? Degree{2, 1} : Degree{1, 2};
    for (const auto& w : ops.elements_of_shape(shape)) {
      auto u = ops.unit_maps(w);
      Edge e{compact_word(w.word), color, compact_word(u.s_unit.word), compact_word(u.r_unit.word)};
      out.element[e.id] = w;
      b_labels[e.id] = u.d_part.word;
      c_labels[e.id] = u.c_part.word;
      edges.push_back(std::move(e));
    }
  }
  std::vector<Square> squares;
  for (const auto& w : ops.elements_of_shape({2, 2})) {
    Square sq;
    sq.i_edge = compact_word(ops.unique_factorize(w, {2, 1}, {0, 1}).first.word);
    sq.j_edge = compact_word(ops.unique_factorize(w, {1, 0}, {1, 2}).second.word);
    sq.j_prime = compact_word(ops.unique_factorize(w, {1, 2}, {1, 0}).first.word);
    sq.i_prime = compact_word(ops.unique_factorize(w, {0, 1}, {2, 1}).second.word);
    squares.push_back(std::move(sq));
  }
  out.graph = Presentation(2, std::move(vertices), std::move(edges), std::move(squares));
  out.b = Cocycle(out.group, out.graph, b_labels);
  out.c = Cocycle(out.group, out.graph, c_labels);
  return out;
}

namespace {

// The group element of a morphism: lambda o mu = lambda b(mu).
A2Element morphism_element(const A2Ops& ops, const LambdaT& l, const Morphism& m) {
  const auto& p = l.graph;
  if (m.word.empty()) return l.element.at(p.vertex_name(m.range));
  A2Element acc = l.element.at(p.edge_name(m.word[0]));
  for (std::size_t i = 1; i < m.word.size(); ++i)
    acc = ops.multiply(acc, ops.element(l.b.edge(m.word[i])));
  return acc;
}

}  // namespace

LambdaTCheck check_lambda_t(const A2Ops& ops, const LambdaT& l, const Degree& bound) {
  LambdaTCheck out;
  const auto& p = l.graph;
  out.valid = validate_presentation(p).pass;
  auto mats = adjacency_matrices(p);
  auto m12 = matmul(mats[0], mats[1]);
  out.matrices_commute = m12 == matmul(mats[1], mats[0]);
  out.product_zero_one = true;
  for (const auto& row : m12)
    for (long long v : row)
      if (v != 0 && v != 1) out.product_zero_one = false;

  const Degree one{1, 1};
  std::vector<std::vector<Morphism>> from(static_cast<std::size_t>(p.num_vertices()));
  for (int u = 0; u < p.num_vertices(); ++u) from[static_cast<std::size_t>(u)] = morphisms_up_to(p, u, bound);

  for (int u = 0; u < p.num_vertices(); ++u) {
    std::set<std::pair<int, GroupElem>> seen;
    for (const auto& lam : from[static_cast<std::size_t>(u)]) {
      ++out.morphisms_checked;
      A2Element el = morphism_element(ops, l, lam);
      GroupElem c = l.c.of(lam), b = l.b.of(lam);
      if (!seen.insert({lam.source, c}).second) ++out.essential_violations;
      if (el.shape != lam.degree + one) {
        ++out.cocycle_violations;
        continue;
      }
      auto um = ops.unit_maps(el);
      bool ok = um.c_part.word == c && um.d_part.word == b &&
                compact_word(um.r_unit.word) == p.vertex_name(lam.range) &&
                compact_word(um.s_unit.word) == p.vertex_name(lam.source) &&
                ops.multiply(ops.element(c), um.s_unit) == el;
      if (!ok) ++out.cocycle_violations;
      for (const auto& mu : from[static_cast<std::size_t>(lam.source)]) {
        if (!(lam.degree + mu.degree).le(bound)) continue;
        ++out.composables;
        Morphism comp = compose(p, lam, mu);
        A2Element lhs = morphism_element(ops, l, comp);
        A2Element rhs = ops.multiply(ops.multiply(ops.element(c), um.s_unit), ops.element(l.b.of(mu)));
        bool good = lhs == rhs && l.c.of(comp) == ops.multiply(ops.element(c), ops.element(l.c.of(mu))).word &&
                    l.b.of(comp) == ops.multiply(ops.element(b), ops.element(l.b.of(mu))).word;
        if (!good) ++out.cocycle_violations;
      }
    }
  }
  return out;
}

SigmaT::SigmaT(A2Ops ops, std::shared_ptr<const LambdaT> l) : ops_(std::move(ops)), l_(std::move(l)) {}

std::string SigmaT::pair_id(const A2Element& x, const A2Element& y) {
  return "(" + compact_word(x.word) + "," + compact_word(y.word) + ")";
}

std::pair<A2Element, A2Element> SigmaT::split_id(const std::string& id) const {
  auto comma = id.find(',');
  if (id.size() < 5 || id.front() != '(' || id.back() != ')' || comma == std::string::npos)
    fail(ErrorCode::kMalformedInput, "bad pair id '" + id + "'");
  auto x = ops_.element(parse_signed_word(ops_.triella(), id.substr(1, comma - 1)));
  auto y = ops_.element(parse_signed_word(ops_.triella(), id.substr(comma + 1, id.size() - comma - 2)));
  if (pair_id(x, y) != id) fail(ErrorCode::kMalformedInput, "pair id '" + id + "' is not in normal form");
  return {x, y};
}

bool SigmaT::has_vertex(const std::string& v) const {
  try {
    auto [x, y] = split_id(v);
    return ops_.multiply(ops_.inverse(x), y).shape == Degree{1, 1};
  } catch (const Error&) {
    return false;
  }
}

Edge SigmaT::make_edge(const A2Element& x, const A2Element& lambda) const {
  const auto& p = l_->graph;
  int e = p.edge_index(compact_word(lambda.word));
  A2Element y = ops_.multiply(x, lambda);
  A2Element r = ops_.multiply(x, l_->element.at(p.vertex_name(p.rng(e))));
  A2Element w = ops_.multiply(x, ops_.element(l_->c.edge(e)));
  return Edge{pair_id(x, y), p.color(e), pair_id(w, y), pair_id(x, r)};
}

std::vector<Edge> SigmaT::edges_into(const std::string& v) const {
  auto [x, z] = split_id(v);
  auto u = ops_.multiply(ops_.inverse(x), z);
  auto vi = l_->graph.find_vertex(compact_word(u.word));
  if (!vi) fail(ErrorCode::kUnknownVertex, v);
  std::vector<Edge> out;
  for (int e : l_->graph.in_edges(*vi)) out.push_back(make_edge(x, l_->element.at(l_->graph.edge_name(e))));
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return out;
}

std::vector<Edge> SigmaT::edges_out_of(const std::string& v) const {
  auto [w, y] = split_id(v);
  auto u = ops_.multiply(ops_.inverse(w), y);
  auto vi = l_->graph.find_vertex(compact_word(u.word));
  if (!vi) fail(ErrorCode::kUnknownVertex, v);
  std::vector<Edge> out;
  for (int e : l_->graph.out_edges(*vi)) {
    A2Element x = ops_.multiply(w, ops_.inverse(ops_.element(l_->c.edge(e))));
    out.push_back(make_edge(x, l_->element.at(l_->graph.edge_name(e))));
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return out;
}

std::pair<Edge, Edge> SigmaT::factor(const Edge& e, const Edge& f) const {
  auto [x, y1] = split_id(e.id);
  auto [x2, y2] = split_id(f.id);
  const auto& p = l_->graph;
  auto lam = p.find_edge(compact_word(ops_.multiply(ops_.inverse(x), y1).word));
  auto mu = p.find_edge(compact_word(ops_.multiply(ops_.inverse(x2), y2).word));
  if (!lam || !mu || e.src != f.rng) fail(ErrorCode::kNotComposable, e.id + " " + f.id);
  auto fw = p.forward(*lam, *mu);
  if (!fw) fail(ErrorCode::kNotComposable, e.id + " " + f.id);
  const auto& mu_p = l_->element.at(p.edge_name(fw->first));
  const auto& lam_p = l_->element.at(p.edge_name(fw->second));
  Edge fp = make_edge(x, mu_p);
  Edge ep = make_edge(ops_.multiply(x, ops_.element(l_->c.edge(fw->first))), lam_p);
  return {fp, ep};
}

std::pair<std::pair<A2Element, A2Element>, std::pair<A2Element, A2Element>> SigmaT::range_source(
    const A2Element& x, const A2Element& y) const {
  auto u = ops_.unit_maps(ops_.multiply(ops_.inverse(x), y));
  return {{x, ops_.multiply(x, u.r_unit)}, {ops_.multiply(x, u.c_part), y}};
}

std::pair<A2Element, A2Element> SigmaT::phi(const A2Element& x, const A2Element& y) const {
  return {x, ops_.multiply(ops_.inverse(x), y)};
}

std::pair<A2Element, A2Element> SigmaT::phi_inverse(const A2Element& x, const A2Element& lambda) const {
  return {x, ops_.multiply(x, lambda)};
}

SigmaTCheck check_sigma_t(const A2Ops& ops, const A2Element& seed, int radius) {
  SigmaTCheck out;
  const Degree one{1, 1};
  std::vector<A2Element> ball, lambdas;
  for (int m = 0; m <= radius; ++m)
    for (int n = 0; m + n <= radius; ++n)
      for (const auto& g : ops.elements_of_shape({m, n})) ball.push_back(ops.multiply(seed, g));
  for (int m = 1; m <= radius; ++m)
    for (int n = 1; n <= radius; ++n)
      for (auto& g : ops.elements_of_shape({m, n})) lambdas.push_back(std::move(g));
  std::sort(ball.begin(), ball.end());
  out.base_points = ball.size();

  struct WordHash {
    std::size_t operator()(const SignedWord& w) const {
      std::size_t h = w.size();
      for (int g : w) h = h * 1000003u + static_cast<std::size_t>(g + 64);
      return h;
    }
  };
  // Unit maps depend only on x^-1 y; precomputed for every lambda, with a
  // direct computation for anything unexpected.
  std::unordered_map<SignedWord, A2Ops::UnitMaps, WordHash> units;
  for (const auto& lam : lambdas) units.emplace(lam.word, ops.unit_maps(lam));

  const Triella& t = ops.triella();
  // Allocation-light products: out = normal form of a^-1 b (or a b).
  auto product = [&](const SignedWord& a, bool invert_a, const SignedWord& b, SignedWord& out) {
    out.clear();
    if (invert_a) {
      for (auto it = a.rbegin(); it != a.rend(); ++it) push_right(t, out, -*it);
    } else {
      out = a;
    }
    for (int g : b) push_right(t, out, g);
  };
  auto shape = [](const SignedWord& w) {
    std::pair<int, int> mn{0, 0};
    for (int g : w) (g > 0 ? mn.first : mn.second)++;
    return mn;
  };
  SignedWord y, xy, z, w, tmp, key;
  for (const auto& x : ball) {
    // r(sigma) has first coordinate x, so collisions can only occur within
    // one base point.
    std::unordered_set<SignedWord, WordHash> keys;
    keys.reserve(lambdas.size() * 2);
    for (const auto& lam : lambdas) {
      product(x.word, false, lam.word, y);
      product(x.word, true, y, xy);
      ++out.elements;
      auto d = shape(xy);
      if (d.first < 1 || d.second < 1) {
        ++out.criterion_violations;
        continue;
      }
      auto it = units.find(xy);
      const A2Ops::UnitMaps u = it != units.end() ? it->second : ops.unit_maps(ops.element(xy));
      product(x.word, false, u.r_unit.word, z);
      product(x.word, false, u.c_part.word, w);
      key = z;
      key.push_back(0);
      key.insert(key.end(), w.begin(), w.end());
      key.push_back(0);
      key.insert(key.end(), y.begin(), y.end());
      if (!keys.insert(key).second) ++out.single_connection_violations;
      product(x.word, true, w, tmp);
      auto xw = shape(tmp);
      product(x.word, true, z, tmp);
      auto xz = shape(tmp);
      product(z, true, y, tmp);
      auto zy = shape(tmp);
      product(w, true, y, tmp);
      auto wy = shape(tmp);
      const std::pair<int, int> unit{1, 1};
      if (xz != unit || wy != unit || xw.first + 1 != d.first || xw.second + 1 != d.second ||
          zy.first + 1 != d.first || zy.second + 1 != d.second)
        ++out.criterion_violations;
      product(x.word, false, xy, tmp);
      if (tmp != y || xy != lam.word) ++out.phi_violations;
    }
  }
  return out;
}

std::string matrix_csv(const Matrix& m) {
  std::string s;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(row[j]);
    }
    s += '\n';
  }
  return s;
}

}  // namespace hrg
