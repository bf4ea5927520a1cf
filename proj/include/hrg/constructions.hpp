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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrg/group.hpp"
#include "hrg/kgraph.hpp"

namespace hrg {

/// Vertices (u,w); edges (e,w) keep their color, (v,f) are shifted by k.
Presentation cartesian_product(const Presentation& a, const Presentation& b);

/// f*(Lambda) for f(n) = An + p. `rows[i]` is A applied to the i-th
/// generator of N^l, so the result has rank rows.size().
Presentation affine_pullback(const Presentation& p, const std::vector<Degree>& rows, const Degree& offset);

/// G x_c Lambda as a lazy graph. Vertex ids "g|v", edge ids "g|e" with g
/// formatted by the group; r(g,e) = (g, r(e)), s(g,e) = (g c(e), s(e)).
class SkewProduct : public LazyKGraph {
 public:
  SkewProduct(Presentation base, Cocycle c);
  int rank() const override { return base_.rank(); }
  bool has_vertex(const std::string& v) const override;
  std::vector<Edge> edges_into(const std::string& v) const override;
  std::vector<Edge> edges_out_of(const std::string& v) const override;
  std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const override;

  const Presentation& base() const { return base_; }
  const Cocycle& cocycle() const { return c_; }
  std::string vertex_id(const GroupElem& g, int v) const;
  std::string edge_id(const GroupElem& g, int e) const;
  /// (g, base index); throws MalformedInput for foreign ids.
  std::pair<GroupElem, int> split_vertex(const std::string& id) const;
  std::pair<GroupElem, int> split_edge(const std::string& id) const;

 private:
  Edge make_edge(const GroupElem& g, int e) const;
  Presentation base_;
  Cocycle c_;
};

/// Full presentation when the group is finite, otherwise the window of
/// `radius` around (seed, v) for every base vertex v.
Presentation skew_product(const Presentation& base, const Cocycle& c, const GroupElem& seed, int radius);

/// Collapses "g|x" ids to x. Throws NotASkewProduct when ids do not split or
/// the images disagree.
Presentation skew_quotient(const Presentation& window);

/// A vertex and edge bijection; absent entries mean fixed.
struct Automorphism {
  std::map<std::string, std::string> vertex;
  std::map<std::string, std::string> edge;
};

/// Resolved index form. Throws NotAnAutomorphism.
struct IndexAutomorphism {
  std::vector<int> vertex, edge, vertex_inv, edge_inv;
};
IndexAutomorphism resolve_automorphism(const Presentation& p, const Automorphism& a);

/// Lambda x_alpha N^l: new edges (v,e_j) of color k+j with r = v and
/// s = alpha_j^{-1}(v). Throws NotAnAutomorphism, AutomorphismsDontCommute.
Presentation crossed_product(const Presentation& p, const std::vector<Automorphism>& alphas);

/// B_n x_alpha Lambda with the B_n edges as color 1; alphas[i] acts for f_{i+1}.
Presentation action_graph(int n, const Presentation& p, const std::vector<Automorphism>& alphas);

/// theta[(i-1)*n2 + (j-1)] = (j', i'), 1-based, meaning e_i f_j = f_j' e_i'.
/// Throws NotABijection.
Presentation monoidal_2graph(int n1, int n2, const std::vector<std::pair<int, int>>& theta);

/// R on X = {0..n-1}: r[e*n + f] = (f', e').
struct YangBaxterMap {
  int n = 0;
  std::vector<std::pair<int, int>> r;
  static YangBaxterMap permutation_type(const std::vector<int>& sigma);
};

/// Throws NotABijection or NotYangBaxter (witness triple in the message).
void check_yang_baxter(const YangBaxterMap& r);
Presentation yang_baxter_graph(int k, const YangBaxterMap& r);

/// perm[c-1] is the new color of color c.
Presentation permute_colors(const Presentation& p, const std::vector<int>& perm);
/// Keeps the listed colors (renumbered 1.. in the given order) and all vertices.
Presentation restrict_colors(const Presentation& p, const std::vector<int>& colors);

struct Isomorphism {
  std::map<std::string, std::string> vertex;
  std::map<std::string, std::string> edge;
};
/// Color-preserving isomorphism carrying squares to squares, by backtracking.
std::optional<Isomorphism> find_isomorphism(const Presentation& a, const Presentation& b);

/// Ids like "u-2", "w5_0", "k5_0"; edges e_n, f_n, g_n, h_n, k_{n,i}.
class NonHausdorffGraph : public LazyKGraph {
 public:
  int rank() const override { return 1; }
  bool has_vertex(const std::string& v) const override;
  std::vector<Edge> edges_into(const std::string& v) const override;
  std::vector<Edge> edges_out_of(const std::string& v) const override;
  std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const override;
};

/// Omega_k: vertices n in N^k written "(n1,..)", edges n -> n + e_i with
/// r = n and s = n + e_i.
class OmegaGraph : public LazyKGraph {
 public:
  explicit OmegaGraph(int k) : k_(k) {}
  int rank() const override { return k_; }
  bool has_vertex(const std::string& v) const override;
  std::vector<Edge> edges_into(const std::string& v) const override;
  std::vector<Edge> edges_out_of(const std::string& v) const override;
  std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const override;
  static std::string edge_id(const Degree& n, int color);

 private:
  int k_;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<Presentation> finite;
  std::shared_ptr<LazyKGraph> lazy;
};

/// Throws UnknownName.
CatalogEntry catalog(const std::string& name);
/// Names of every finite catalog entry (fixture set), plus the lazy ones.
std::vector<std::string> catalog_finite_names();
std::vector<std::string> catalog_lazy_names();

/// Depth of the binary tree fixture; paths p1, p2 leave the root along
/// different branches.
constexpr int kTreeDepth = 10;

}  // namespace hrg
