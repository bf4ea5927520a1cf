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

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrg/group.hpp"
#include "hrg/kgraph.hpp"

namespace hrg {

/// Points and lines 0..n-1, n = q^2 + q + 1. lines[l] is sorted.
struct ProjectivePlane {
  int q = 0;
  std::vector<std::vector<int>> lines;
  int size() const { return static_cast<int>(lines.size()); }
  bool incident(int point, int line) const;
};

struct PlaneReport {
  bool ok = true;
  std::string failure;          // "" when ok
  std::vector<int> witness;     // offending points or lines
};

PlaneReport validate_plane(const ProjectivePlane& plane);

/// Field plane PG(2, q) for q in {2, 3}. Throws UnsupportedOrder.
ProjectivePlane build_plane(int q);
/// Lines {i+1, i+2, i+4} mod 7, indexed by i.
ProjectivePlane cyclic_fano_plane();

using Triple = std::array<int, 3>;

class Triella {
 public:
  /// Checks the plane and (T1)-(T3). Throws TriellaAxiomViolation naming
  /// the axiom and a witness, or MalformedInput for out-of-range data.
  Triella(ProjectivePlane plane, std::vector<int> lambda, std::set<Triple> triples);

  /// Points 0..6, lambda(i) = {i+1, i+2, i+4}, T = rotations of (i, i+1, i+3).
  static Triella preset_a1();
  static Triella preset(const std::string& name);  // "A1"

  const ProjectivePlane& plane() const { return plane_; }
  int points() const { return plane_.size(); }
  const std::vector<int>& lambda() const { return lambda_; }
  const std::set<Triple>& triples() const { return triples_; }
  bool in_lambda(int x, int y) const { return in_lambda_[idx(x, y)]; }
  /// z with (x, y, z) in T, or -1.
  int third(int x, int y) const { return third_[idx(x, y)]; }
  /// Right swap: a_x^-1 a_y = a_s a_t^-1 (x != y).
  std::pair<int, int> right_swap(int x, int y) const { return right_swap_[idx(x, y)]; }
  /// Left swap: a_x a_y^-1 = a_s^-1 a_t (x != y).
  std::pair<int, int> left_swap(int x, int y) const { return left_swap_[idx(x, y)]; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x * points() + y); }
  ProjectivePlane plane_;
  std::vector<int> lambda_;
  std::set<Triple> triples_;
  std::vector<char> in_lambda_;
  std::vector<int> third_;
  std::vector<std::pair<int, int>> right_swap_, left_swap_;
};

/// Letters are x+1 for a_x and -(x+1) for a_x^-1.
using SignedWord = std::vector<int>;

enum class NormalSide { kRight, kLeft };

/// "a0 a4^-1 a6"; whitespace separated. Throws MalformedInput.
SignedWord parse_signed_word(const Triella& t, const std::string& text);
/// Space separated, "e" for the empty word.
std::string format_signed_word(const SignedWord& w);
/// Compact id form: "a0a4^-1a6", "e" for the empty word.
std::string compact_word(const SignedWord& w);

/// Right normal form: positives, then negatives. Left: negatives first.
SignedWord normalize(const Triella& t, const SignedWord& w, NormalSide side = NormalSide::kRight);

/// One rewrite step of the rule-by-rule normalizer, for auditing.
struct RewriteStep {
  std::string rule;  // "cancel", "contract+", "contract-", "swap"
  std::size_t pos;
  SignedWord before, after;
};
/// Leftmost-first rewriting with the same rules; slow, reports every step.
SignedWord normalize_traced(const Triella& t, const SignedWord& w, NormalSide side,
                            const std::function<void(const RewriteStep&)>& on_step);

/// (positives, negatives) of the right normal form.
Degree shape_of_normal(const SignedWord& normal);

/// Group elements in right normal form.
struct A2Element {
  SignedWord word;
  Degree shape{0, 0};
  friend bool operator==(const A2Element& a, const A2Element& b) { return a.word == b.word; }
  friend bool operator<(const A2Element& a, const A2Element& b);  // shortlex
};

class A2Ops {
 public:
  explicit A2Ops(std::shared_ptr<const Triella> t) : t_(std::move(t)) {}
  const Triella& triella() const { return *t_; }
  std::shared_ptr<const Triella> triella_ptr() const { return t_; }

  A2Element element(const SignedWord& w) const;
  A2Element letter(int x, int sign = 1) const { return element({sign * (x + 1)}); }
  A2Element identity() const { return A2Element{}; }
  A2Element multiply(const A2Element& a, const A2Element& b) const;
  A2Element inverse(const A2Element& a) const;
  bool equal(const A2Element& a, const A2Element& b) const { return a.word == b.word; }
  Degree shape(const A2Element& a) const { return a.shape; }

  /// w = h k with shape(h) = m, shape(k) = n. Throws ShapeMismatch.
  std::pair<A2Element, A2Element> unique_factorize(const A2Element& w, const Degree& m, const Degree& n) const;

  struct UnitMaps {
    A2Element s_unit, r_unit, c_part, d_part;  // w = r_unit d_part = c_part s_unit
  };
  /// Throws ShapeTooSmall unless shape(w) >= (1,1).
  UnitMaps unit_maps(const A2Element& w) const;

  /// Every element with the given shape, shortlex ordered.
  std::vector<A2Element> elements_of_shape(const Degree& shape) const;

 private:
  std::shared_ptr<const Triella> t_;
};

/// Gamma_T as a Group for cocycles; elements are right normal forms.
class A2Group : public Group {
 public:
  explicit A2Group(A2Ops ops) : ops_(std::move(ops)) {}
  std::string kind() const override { return "a2"; }
  GroupElem identity() const override { return {}; }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inverse(const GroupElem& a) const override;
  std::string format(const GroupElem& a) const override { return format_signed_word(a); }
  GroupElem parse(const std::string& text) const override;
  const A2Ops& ops() const { return ops_; }

 private:
  A2Ops ops_;
};

struct LambdaT {
  Presentation graph;               // vertices shortlex; edges shape (2,1) then (1,2)
  std::shared_ptr<A2Group> group;
  Cocycle b, c;
  std::map<std::string, A2Element> element;  // vertex or edge id -> element
};

/// Builds Lambda_T. Colour-1 edges are shape (2,1) elements, colour-2 edges
/// shape (1,2); squares come from shape (2,2) elements. b and c are checked
/// functorial on every square by construction.
LambdaT lambda_t(const A2Ops& ops);

struct LambdaTCheck {
  bool valid = false;                 // validate_presentation
  bool matrices_commute = false;      // M1 M2 = M2 M1
  bool product_zero_one = false;      // entries of M1 M2 in {0, 1}
  std::size_t composables = 0;
  std::size_t cocycle_violations = 0; // b, c laws and lambda = c s
  std::size_t essential_violations = 0;
  std::size_t morphisms_checked = 0;
};

/// Composition laws on every pair of composable morphisms with degrees up
/// to `bound`, and injectivity of c on each u Lambda v up to `bound`.
LambdaTCheck check_lambda_t(const A2Ops& ops, const LambdaT& l, const Degree& bound);

/// Sigma_T in pair coordinates, built from Lambda_T through phi. Ids are
/// "(x,y)" with compact words.
class SigmaT : public LazyKGraph {
 public:
  SigmaT(A2Ops ops, std::shared_ptr<const LambdaT> l);
  int rank() const override { return 2; }
  bool has_vertex(const std::string& v) const override;
  std::vector<Edge> edges_into(const std::string& v) const override;
  std::vector<Edge> edges_out_of(const std::string& v) const override;
  std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const override;

  static std::string pair_id(const A2Element& x, const A2Element& y);
  std::pair<A2Element, A2Element> split_id(const std::string& id) const;

  /// (x, z) and (w, y) from the shape equations for x^-1 y.
  std::pair<std::pair<A2Element, A2Element>, std::pair<A2Element, A2Element>> range_source(
      const A2Element& x, const A2Element& y) const;
  /// phi(x, y) = (x, x^-1 y) and its inverse.
  std::pair<A2Element, A2Element> phi(const A2Element& x, const A2Element& y) const;
  std::pair<A2Element, A2Element> phi_inverse(const A2Element& x, const A2Element& lambda) const;

 private:
  Edge make_edge(const A2Element& x, const A2Element& lambda) const;
  A2Ops ops_;
  std::shared_ptr<const LambdaT> l_;
};

struct SigmaTCheck {
  std::size_t base_points = 0;  // x values
  std::size_t elements = 0;     // pairs (x, y)
  std::size_t single_connection_violations = 0;
  std::size_t criterion_violations = 0;
  std::size_t phi_violations = 0;
  bool ok() const { return single_connection_violations == 0 && criterion_violations == 0 && phi_violations == 0; }
};

/// All (x, y) with x = seed g, |shape(g)| <= radius, and 1 <= shape(x^-1 y)
/// <= (radius, radius): ranges and sources recomputed from the shape
/// equations, at most one element per (range, source), the connection
/// criterion on every element, and phi round trips.
SigmaTCheck check_sigma_t(const A2Ops& ops, const A2Element& seed, int radius);

/// Adjacency matrices as CSV, rows and columns in vertex order.
std::string matrix_csv(const Matrix& m);

}  // namespace hrg
