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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrg/degree.hpp"
#include "hrg/error.hpp"

namespace hrg {

struct Edge {
  std::string id;
  int color = 0;  // 1-based
  std::string src;
  std::string rng;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// i_edge . j_edge = j_prime . i_prime, color(i_edge) < color(j_edge).
struct Square {
  std::string i_edge;
  std::string j_edge;
  std::string j_prime;
  std::string i_prime;
  friend bool operator==(const Square&, const Square&) = default;
};

/// Colored skeleton plus factorization squares. Construction checks only
/// structure (ids, references, colors); validate_presentation checks the
/// k-graph conditions.
class Presentation {
 public:
  struct SquareIdx {
    int i_edge, j_edge, j_prime, i_prime;
  };

  Presentation() = default;
  Presentation(int k, std::vector<std::string> vertices, std::vector<Edge> edges,
               std::vector<Square> squares);

  int rank() const { return k_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  const std::vector<SquareIdx>& square_indices() const { return square_idx_; }

  int vertex_index(std::string_view id) const;
  std::optional<int> find_vertex(std::string_view id) const;
  int edge_index(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;

  const std::string& vertex_name(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::string& edge_name(int e) const { return edges_[static_cast<std::size_t>(e)].id; }
  int color(int e) const { return color_[static_cast<std::size_t>(e)]; }
  int src(int e) const { return src_[static_cast<std::size_t>(e)]; }
  int rng(int e) const { return rng_[static_cast<std::size_t>(e)]; }

  /// Edges with range v (resp. source v), ordered by id.
  const std::vector<int>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }

  /// (e, f) -> (f', e') for e of lower color; nullopt when absent.
  std::optional<std::pair<int, int>> forward(int e, int f) const;
  /// (f', e') -> (e, f), the inverse lookup.
  std::optional<std::pair<int, int>> backward(int f_prime, int e_prime) const;

  /// Number of squares sharing a forward (resp. backward) key; > 1 means
  /// the square map is not a function (resp. not injective).
  int forward_multiplicity(int e, int f) const;
  int backward_multiplicity(int f_prime, int e_prime) const;

 private:
  std::uint64_t key(int a, int b) const {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(edges_.size()) +
           static_cast<std::uint64_t>(b);
  }

  int k_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::vector<SquareIdx> square_idx_;
  std::unordered_map<std::string, int> vindex_;
  std::unordered_map<std::string, int> eindex_;
  std::vector<int> color_, src_, rng_;
  std::vector<std::vector<int>> in_, out_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> fwd_, bwd_;
  std::unordered_map<std::uint64_t, int> fwd_count_, bwd_count_;
};

/// A path in canonical form: colors nondecreasing left to right, with
/// s(word[i]) = r(word[i+1]). Vertices have an empty word.
struct Morphism {
  int range = -1;
  int source = -1;
  std::vector<int> word;
  Degree degree;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct ValidationReport {
  bool pass = true;
  /// "", "square_incidence", "square_not_bijective", "hexagon_mismatch".
  std::string failure;
  std::vector<std::string> witness;
  std::string detail;
  bool partial = false;
  bool hexagon_vacuous = true;
  std::size_t squares_checked = 0;
  std::size_t hexagons_checked = 0;
};

enum class ValidationMode { kFull, kPartial };

/// kPartial is for windows of lazy graphs: squares must be well formed and
/// injective, but composable pairs without a square are tolerated.
ValidationReport validate_presentation(const Presentation& p,
                                       ValidationMode mode = ValidationMode::kFull);

Morphism vertex_morphism(const Presentation& p, int v);
Morphism edge_morphism(const Presentation& p, int e);
Morphism canonical_form(const Presentation& p, const std::vector<int>& word);
Morphism canonical_form(const Presentation& p, const std::vector<std::string>& word);
Morphism compose(const Presentation& p, const Morphism& mu, const Morphism& nu);
Morphism segment(const Presentation& p, const Morphism& lambda, const Degree& m, const Degree& n);

/// Rewrites `word` (composable) to the unique equivalent word whose color
/// sequence is `target`, using single-square swaps.
std::vector<int> reorder(const Presentation& p, std::vector<int> word,
                         const std::vector<int>& target_colors);

/// u Lambda^n v in lexicographic order of edge ids.
std::vector<Morphism> morphisms(const Presentation& p, int u, int v, const Degree& n);
/// All morphisms with range u and degree exactly n (any source).
std::vector<Morphism> morphisms_from(const Presentation& p, int u, const Degree& n);
/// All morphisms with range u and degree <= bound.
std::vector<Morphism> morphisms_up_to(const Presentation& p, int u, const Degree& bound);

using Matrix = std::vector<std::vector<long long>>;
std::vector<Matrix> adjacency_matrices(const Presentation& p);
Matrix matmul(const Matrix& a, const Matrix& b);

enum class TriState { kYes, kNo, kUnknown };
const char* tri_state_name(TriState t);

struct ConnectivityReport {
  std::vector<std::vector<std::string>> components;
  bool strongly_connected = false;
  TriState singly_connected = TriState::kUnknown;
  /// For kNo: two distinct parallel morphisms.
  std::optional<std::pair<Morphism, Morphism>> witness;
  bool has_cycle = false;
  bool rigid = false;
};

ConnectivityReport connectivity_report(const Presentation& p);

/// Edge ids joined by '.', or the vertex id for a vertex.
std::string morphism_label(const Presentation& p, const Morphism& m);

/// Interface for infinite, locally finite k-graphs. Implementations must be
/// deterministic and safe for concurrent const use.
class LazyKGraph {
 public:
  virtual ~LazyKGraph() = default;
  virtual int rank() const = 0;
  virtual bool has_vertex(const std::string& v) const = 0;
  /// Edges e with r(e) = v, ordered by id.
  virtual std::vector<Edge> edges_into(const std::string& v) const = 0;
  /// Edges e with s(e) = v, ordered by id.
  virtual std::vector<Edge> edges_out_of(const std::string& v) const = 0;
  /// For e of color i and f of color j > i with s(e) = r(f): (f', e') with
  /// ef = f'e'.
  virtual std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const = 0;
};

/// A finite presentation seen through the lazy interface.
class FiniteKGraph : public LazyKGraph {
 public:
  explicit FiniteKGraph(const Presentation& p) : p_(p) {}
  int rank() const override { return p_.rank(); }
  bool has_vertex(const std::string& v) const override;
  std::vector<Edge> edges_into(const std::string& v) const override;
  std::vector<Edge> edges_out_of(const std::string& v) const override;
  std::pair<Edge, Edge> factor(const Edge& e, const Edge& f) const override;
  const Presentation& presentation() const { return p_; }

 private:
  const Presentation& p_;
};

/// Vertices within `radius` undirected edge steps of the seeds, all edges
/// among them, and every square whose four edges are present.
Presentation window(const LazyKGraph& g, const std::vector<std::string>& seeds, int radius);

/// The window above, enlarged until every composable pair of distinct colours
/// inside it has its whole square inside it. Throws WindowTooSmall past
/// `max_vertices`.
Presentation square_closed_window(const LazyKGraph& g, const std::vector<std::string>& seeds, int radius,
                                  std::size_t max_vertices = 100000);

}  // namespace hrg
