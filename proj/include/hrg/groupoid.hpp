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

#include <optional>
#include <string>
#include <vector>

#include "hrg/group.hpp"
#include "hrg/kgraph.hpp"

namespace hrg {

/// Signed group word: letter +-(g+1) for generator g.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word invert_word(const Word& w);

/// Fundamental group via a BFS spanning tree of the undirected skeleton.
struct GroupPresentation {
  std::string basepoint;
  std::vector<std::string> generators;  // edge ids outside the tree
  std::vector<Word> relators;           // nonempty, freely reduced
  /// Per edge of the source presentation: 0 for tree edges, else g+1.
  std::vector<int> edge_letter;
  std::vector<std::string> tree_edges;

  /// Tree-contracted word of an edge path (edges as positive letters).
  Word word_of(const std::vector<int>& edge_word) const;
  std::string format(const Word& w) const;
};

/// Root of the tree is the lexicographically least vertex. Throws
/// Disconnected, UnknownVertex.
GroupPresentation fundamental_group_presentation(const Presentation& p, const std::string& basepoint = "");

struct AbelianInvariants {
  int rank = 0;
  std::vector<long long> torsion;  // each > 1, each dividing the next
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
};

/// Smith normal form of the relator matrix. `generator_images` receives, per
/// generator, its image in Z^rank + torsion (torsion coordinates reduced).
AbelianInvariants abelianized_invariants(const GroupPresentation& gp,
                                         std::vector<std::vector<long long>>* generator_images = nullptr);

/// Exhaustive check that c separates distinct morphisms of uLambda^n v for
/// every u, v and every n <= bound. Returns the first clash, if any.
std::optional<std::pair<Morphism, Morphism>> injectivity_violation(const Presentation& p, const Cocycle& c,
                                                                    const Degree& bound);

struct EssentialCocycle {
  Cocycle cocycle;         // already paired with the degree where applicable
  std::string source;      // "free", "hint", "abelian"
  Degree checked_up_to;
  bool exact = false;      // true when p has no cycles, so the bounded check is complete
  std::string note;
};

/// Priority: free cocycle (1-graphs), the hint, the universal abelian
/// cocycle. Each candidate is paired with the degree and verified.
std::optional<EssentialCocycle> essential_cocycle_search(const Presentation& p, const Degree& degree_bound,
                                                         const std::optional<Cocycle>& hint = std::nullopt);

/// Replace word[pos, pos+|from|) = from by to. relator < 0 marks a free
/// cancellation or insertion.
struct ProofStep {
  std::size_t pos = 0;
  Word from;
  Word to;
  int relator = -1;
};

struct CollapseProof {
  Morphism lhs;
  Morphism rhs;
  std::vector<std::string> lhs_edges;  // edge ids of the canonical forms
  std::vector<std::string> rhs_edges;
  Word start;
  Word end;
  std::vector<ProofStep> steps;
  int round = 0;
  std::size_t rules = 0;
};

/// Bounded completion over pi_1. `depth` caps the derivation height of
/// rules and the length of rule left-hand sides; rule count is capped at
/// 64*depth. Candidates are distinct parallel morphisms of degree <= 2*1.
std::optional<CollapseProof> collapse_search(const Presentation& p, int depth);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Independent check: recomputes the presentation, checks the endpoints
/// and every step.
ReplayResult replay_collapse_proof(const Presentation& p, const CollapseProof& proof);

struct SimplyConnectedResult {
  TriState verdict = TriState::kUnknown;
  std::string reason;
  bool window_caveat = false;
  AbelianInvariants abelian;
};

SimplyConnectedResult simply_connected_test(const Presentation& p, int depth, bool windowed = false);

struct Grading {
  bool ok = false;
  std::vector<Degree> values;  // per vertex index when ok
  std::string witness_edge;    // inconsistent edge otherwise
  std::string base;
};

/// f(s(e)) = f(r(e)) + d(e) by BFS from the first vertex. Throws
/// Disconnected.
Grading grading_function(const Presentation& p);

enum class Verdict { kEmbeds, kNotEmbeds, kInconclusive };
const char* verdict_name(Verdict v);

struct EmbeddabilityReport {
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;  // "free-cocycle", "singly-connected", "essential-cocycle", "collapse", "none"
  std::optional<EssentialCocycle> cocycle;
  std::optional<CollapseProof> proof;
  std::optional<std::pair<Morphism, Morphism>> singly_connected_witness;
  TriState singly_connected = TriState::kUnknown;
  AbelianInvariants abelian;
  bool abelian_available = false;
  int depth = 0;
  Degree degree_bound;
  std::string note;
};

EmbeddabilityReport embeddability_report(const Presentation& p, int depth, const Degree& degree_bound,
                                         const std::optional<Cocycle>& hint = std::nullopt);

}  // namespace hrg
