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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrg/groupoid.hpp"
#include "hrg/kgraph.hpp"

namespace hrg {

/// An infinite (or window-truncated) path given by its degree-1 blocks.
/// block(n) is x(n1, (n+1)1) as k edges in colour order, listed range to
/// source. Later truncations extend earlier ones by construction.
struct PathStream {
  std::string name;
  std::string start;  // x(0)
  std::function<std::vector<Edge>(int)> block;
  std::optional<int> length;  // number of blocks; nullopt when unbounded

  int available(int n_max) const { return length ? std::min(*length, n_max) : n_max; }
  /// x(n1); requires n <= length.
  std::string vertex(int n) const;
  /// x(0, n1) as a range-to-source edge list.
  std::vector<Edge> truncation(int n) const;
};

PathStream finite_stream(std::string name, std::string start, std::vector<std::vector<Edge>> blocks);

/// Checks that the first n blocks are edges of g, composable, one edge of
/// each colour per block in colour order. Throws MalformedInput.
void check_stream(const LazyKGraph& g, const PathStream& x, int n);

/// Named streams: "e-ray", "f-ray", "z:<n>", "zx:<n>", "zy:<n>" on
/// lambda-E-4.5; "p1", "p2" (all-0 and all-1 branches) on tree-fixture; and
/// "path:<start>/<block>,<block>,...[;<block>,...]" anywhere, where a block
/// is edge ids joined by '.' and the part after ';' repeats forever. Throws
/// MalformedInput.
PathStream parse_stream(const LazyKGraph& g, const std::string& graph_name, const std::string& spec);

struct UpperBoundResult {
  std::optional<std::string> vertex;
  /// Both forward-reachable sets were enumerated completely.
  bool exhausted = false;
  std::vector<std::string> reach_u, reach_v;  // sorted; complete when exhausted
};

/// Searches for w with u Gamma w and v Gamma w nonempty, expanding both
/// reachable sets (sources of paths ending at u, v) layer by layer up to
/// `radius`. The least id at the first layer with a common vertex wins.
/// Throws WindowExhausted when u or v is not a vertex of g.
UpperBoundResult common_upper_bound(const LazyKGraph& g, const std::string& u, const std::string& v, int radius);

struct SeparationVerdict {
  bool separated = false;
  int n = 0;      // SeparatedAt(n1), or the N_max searched
  int n_max = 0;  // requested bound
  /// Separated: the two exhausted, disjoint reachable sets.
  std::vector<std::string> reach_x, reach_y;
  /// Not separated: per n, the common upper bound found ("" when the
  /// search ran out of radius without an answer).
  std::vector<std::string> witnesses;
};

/// Diagonal search n = 0..N_max. Throws ShiftEquivalentDetected when some
/// sigma^p x and sigma^q y agree on every block both define.
SeparationVerdict separation_test(const LazyKGraph& g, const PathStream& x, const PathStream& y, int n_max,
                                  int radius = 64);

/// Recomputes a SeparatedAt certificate against g: both sets closed under
/// taking sources, containing x(n1) and y(n1) respectively, and disjoint.
bool verify_separation(const LazyKGraph& g, const PathStream& x, const PathStream& y, const SeparationVerdict& v);

struct LowerSet {
  std::vector<std::string> vertices;  // sorted
  bool downward_closed = false;       // filter axiom (b) on interior vertices
  bool directed = false;              // filter axiom (a) on sampled pairs
  std::size_t pairs_checked = 0;
};

/// {v : v Gamma x(n1) nonempty for some n <= radius}, explored `radius`
/// steps below each x(n1). Throws NotSinglyConnected when the window
/// around the stream is not singly connected.
LowerSet path_lower_set(const LazyKGraph& g, const PathStream& x, int radius);

struct DiagonalSubgraphs {
  Presentation diagonal;           // edges: all degree-1 morphisms
  std::optional<Presentation> e;   // vertices f^-1(Z1), edges E^0 Lambda^1
};

/// Throws NoGrading when `grading` is given but inconsistent.
DiagonalSubgraphs diagonal_subgraphs(const Presentation& p, const std::optional<Grading>& grading);

struct ShiftUniqueness {
  bool ok = true;
  /// Two diagonal morphisms u -> w of different length or different
  /// words, when !ok.
  std::optional<std::pair<Morphism, Morphism>> witness;
};

/// Exhaustive on the window for diagonal degrees n1 with n <= max_n.
/// Throws NotSinglyConnected when p is not singly connected.
ShiftUniqueness shift_uniqueness_check(const Presentation& p, int max_n);

}  // namespace hrg
