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
#include <string>
#include <vector>

#include "hrg/kgraph.hpp"

namespace hrg {

/// Group elements are always stored in a canonical encoding, so equality
/// is vector equality.
using GroupElem = std::vector<int>;

class Group {
 public:
  virtual ~Group() = default;
  virtual std::string kind() const = 0;
  virtual GroupElem identity() const = 0;
  virtual GroupElem multiply(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem inverse(const GroupElem& a) const = 0;
  virtual std::string format(const GroupElem& a) const = 0;
  virtual GroupElem parse(const std::string& text) const = 0;
  virtual bool finite() const { return false; }
  /// All elements, for finite groups only.
  virtual std::vector<GroupElem> elements() const;

  bool equal(const GroupElem& a, const GroupElem& b) const { return a == b; }
  bool is_identity(const GroupElem& a) const { return a == identity(); }
};

using GroupPtr = std::shared_ptr<const Group>;

/// Elements {i} for 0 <= i < n with a Cayley table; named g0, g1, ...
class FiniteGroup : public Group {
 public:
  /// table[a][b] = ab; element 0 must be the identity. Group axioms checked.
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  static std::shared_ptr<FiniteGroup> cyclic(int n);
  static std::shared_ptr<FiniteGroup> trivial() { return cyclic(1); }

  std::string kind() const override { return "finite"; }
  GroupElem identity() const override { return {0}; }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inverse(const GroupElem& a) const override;
  std::string format(const GroupElem& a) const override;
  GroupElem parse(const std::string& text) const override;
  bool finite() const override { return true; }
  std::vector<GroupElem> elements() const override;
  int order() const { return static_cast<int>(table_.size()); }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

/// Free group on t1..tn. Letters are +-(i+1); words are freely reduced.
class FreeGroup : public Group {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {}
  std::string kind() const override { return "free"; }
  GroupElem identity() const override { return {}; }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inverse(const GroupElem& a) const override;
  /// "t1 t2^-1", or "e" for the identity.
  std::string format(const GroupElem& a) const override;
  GroupElem parse(const std::string& text) const override;
  int rank() const { return rank_; }
  static GroupElem generator(int i) { return {i + 1}; }

 private:
  int rank_;
};

/// Z^rank + Z/t1 + ... ; torsion coordinates reduced into [0, t).
class AbelianGroup : public Group {
 public:
  AbelianGroup(int rank, std::vector<int> torsion = {});
  std::string kind() const override { return "abelian"; }
  GroupElem identity() const override;
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inverse(const GroupElem& a) const override;
  /// "(1,0)".
  std::string format(const GroupElem& a) const override;
  GroupElem parse(const std::string& text) const override;
  bool finite() const override { return rank_ == 0; }
  std::vector<GroupElem> elements() const override;
  int rank() const { return rank_; }
  const std::vector<int>& torsion() const { return torsion_; }
  GroupElem reduce(GroupElem a) const;

 private:
  int rank_;
  std::vector<int> torsion_;
};

/// G x H. Encoding: [|a|, a..., b...].
class ProductGroup : public Group {
 public:
  ProductGroup(GroupPtr g, GroupPtr h) : g_(std::move(g)), h_(std::move(h)) {}
  std::string kind() const override { return "product"; }
  GroupElem identity() const override { return pair(g_->identity(), h_->identity()); }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inverse(const GroupElem& a) const override;
  /// "<a> x <b>".
  std::string format(const GroupElem& a) const override;
  GroupElem parse(const std::string& text) const override;
  bool finite() const override { return g_->finite() && h_->finite(); }
  std::vector<GroupElem> elements() const override;

  const Group& left() const { return *g_; }
  const Group& right() const { return *h_; }

  static GroupElem pair(const GroupElem& a, const GroupElem& b);
  static GroupElem first(const GroupElem& x);
  static GroupElem second(const GroupElem& x);

 private:
  GroupPtr g_, h_;
};

/// A functor c : Lambda -> G given by edge labels. Functoriality on every
/// square is checked at construction.
class Cocycle {
 public:
  Cocycle() = default;
  /// Missing labels mean the identity. Throws NonFunctorialCocycle naming
  /// the failing square, UnknownName for labels of unknown edges.
  Cocycle(GroupPtr group, const Presentation& p, const std::map<std::string, GroupElem>& labels);

  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  const GroupElem& edge(int e) const { return labels_[static_cast<std::size_t>(e)]; }
  const std::vector<GroupElem>& labels() const { return labels_; }
  GroupElem of(const Morphism& m) const;
  GroupElem of_word(const std::vector<int>& word) const;

 private:
  GroupPtr group_;
  std::vector<GroupElem> labels_;
};

/// The degree functor into Z^k.
Cocycle degree_cocycle(const Presentation& p);
/// (c, d) into G x Z^k.
Cocycle pair_with_degree(const Presentation& p, const Cocycle& c);

}  // namespace hrg
