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

#include "hrg/group.hpp"

#include <sstream>

namespace hrg {

std::vector<GroupElem> Group::elements() const {
  fail(ErrorCode::kInternal, "group '" + kind() + "' is not finite");
}

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  fail(ErrorCode::kMalformedInput, "bad integer in '" + context + "'");
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  int n = static_cast<int>(table_.size());
  if (n == 0) fail(ErrorCode::kMalformedInput, "empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::kMalformedInput, "group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(ErrorCode::kMalformedInput, "group table entry out of range");
  }
  auto at = [this](int a, int b) { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a) fail(ErrorCode::kMalformedInput, "element 0 is not the identity");
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[static_cast<std::size_t>(a)] < 0) fail(ErrorCode::kMalformedInput, "group table lacks inverses");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) fail(ErrorCode::kMalformedInput, "group table is not associative");
}

std::shared_ptr<FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1) fail(ErrorCode::kMalformedInput, "cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return std::make_shared<FiniteGroup>(std::move(t));
}

GroupElem FiniteGroup::multiply(const GroupElem& a, const GroupElem& b) const {
  return {table_.at(static_cast<std::size_t>(a.at(0))).at(static_cast<std::size_t>(b.at(0)))};
}

GroupElem FiniteGroup::inverse(const GroupElem& a) const { return {inv_.at(static_cast<std::size_t>(a.at(0)))}; }

std::string FiniteGroup::format(const GroupElem& a) const { return "g" + std::to_string(a.at(0)); }

GroupElem FiniteGroup::parse(const std::string& text) const {
  if (text.size() < 2 || text[0] != 'g') fail(ErrorCode::kMalformedInput, "bad finite group element '" + text + "'");
  int v = parse_int(text.substr(1), text);
  if (v < 0 || v >= order()) fail(ErrorCode::kMalformedInput, "element out of range '" + text + "'");
  return {v};
}

std::vector<GroupElem> FiniteGroup::elements() const {
  std::vector<GroupElem> out;
  for (int i = 0; i < order(); ++i) out.push_back({i});
  return out;
}

// ---------------------------------------------------------------------------

GroupElem FreeGroup::multiply(const GroupElem& a, const GroupElem& b) const {
  GroupElem out = a;
  for (int x : b) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

GroupElem FreeGroup::inverse(const GroupElem& a) const {
  GroupElem out(a.rbegin(), a.rend());
  for (int& x : out) x = -x;
  return out;
}

std::string FreeGroup::format(const GroupElem& a) const {
  if (a.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ' ';
    s += "t" + std::to_string(std::abs(a[i]));
    if (a[i] < 0) s += "^-1";
  }
  return s;
}

GroupElem FreeGroup::parse(const std::string& text) const {
  GroupElem out;
  for (const auto& t : tokens(text)) {
    if (t == "e") continue;
    std::string body = t;
    int sign = 1;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      body.resize(body.size() - 3);
    }
    if (body.size() < 2 || body[0] != 't') fail(ErrorCode::kMalformedInput, "bad free letter '" + t + "'");
    int i = parse_int(body.substr(1), t);
    if (i < 1 || i > rank_) fail(ErrorCode::kMalformedInput, "free letter out of range '" + t + "'");
    out = multiply(out, {sign * i});
  }
  return out;
}

// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(int rank, std::vector<int> torsion) : rank_(rank), torsion_(std::move(torsion)) {
  if (rank_ < 0) fail(ErrorCode::kMalformedInput, "negative rank");
  for (int t : torsion_)
    if (t < 2) fail(ErrorCode::kMalformedInput, "torsion coefficients must be > 1");
}

GroupElem AbelianGroup::identity() const { return GroupElem(static_cast<std::size_t>(rank_) + torsion_.size(), 0); }

GroupElem AbelianGroup::reduce(GroupElem a) const {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    int& x = a[static_cast<std::size_t>(rank_) + i];
    x %= torsion_[i];
    if (x < 0) x += torsion_[i];
  }
  return a;
}

GroupElem AbelianGroup::multiply(const GroupElem& a, const GroupElem& b) const {
  GroupElem out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
  return reduce(std::move(out));
}

GroupElem AbelianGroup::inverse(const GroupElem& a) const {
  GroupElem out = a;
  for (int& x : out) x = -x;
  return reduce(std::move(out));
}

std::string AbelianGroup::format(const GroupElem& a) const { return Degree(a).str(); }

GroupElem AbelianGroup::parse(const std::string& text) const {
  GroupElem v = Degree::parse(text).values();
  if (v.size() != static_cast<std::size_t>(rank_) + torsion_.size())
    fail(ErrorCode::kMalformedInput, "abelian element has wrong length '" + text + "'");
  return reduce(std::move(v));
}

std::vector<GroupElem> AbelianGroup::elements() const {
  if (rank_ != 0) Group::elements();
  std::vector<GroupElem> out{identity()};
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    std::vector<GroupElem> next;
    for (const auto& g : out)
      for (int x = 0; x < torsion_[i]; ++x) {
        GroupElem h = g;
        h[i] = x;
        next.push_back(h);
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

GroupElem ProductGroup::pair(const GroupElem& a, const GroupElem& b) {
  GroupElem out;
  out.reserve(1 + a.size() + b.size());
  out.push_back(static_cast<int>(a.size()));
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GroupElem ProductGroup::first(const GroupElem& x) {
  std::size_t n = static_cast<std::size_t>(x.at(0));
  return GroupElem(x.begin() + 1, x.begin() + 1 + static_cast<std::ptrdiff_t>(n));
}

GroupElem ProductGroup::second(const GroupElem& x) {
  std::size_t n = static_cast<std::size_t>(x.at(0));
  return GroupElem(x.begin() + 1 + static_cast<std::ptrdiff_t>(n), x.end());
}

GroupElem ProductGroup::multiply(const GroupElem& a, const GroupElem& b) const {
  return pair(g_->multiply(first(a), first(b)), h_->multiply(second(a), second(b)));
}

GroupElem ProductGroup::inverse(const GroupElem& a) const {
  return pair(g_->inverse(first(a)), h_->inverse(second(a)));
}

std::string ProductGroup::format(const GroupElem& a) const {
  return "<" + g_->format(first(a)) + "> x <" + h_->format(second(a)) + ">";
}

GroupElem ProductGroup::parse(const std::string& text) const {
  auto mid = text.find("> x <");
  if (text.size() < 2 || text.front() != '<' || text.back() != '>' || mid == std::string::npos)
    fail(ErrorCode::kMalformedInput, "bad product element '" + text + "'");
  return pair(g_->parse(text.substr(1, mid - 1)), h_->parse(text.substr(mid + 5, text.size() - mid - 6)));
}

std::vector<GroupElem> ProductGroup::elements() const {
  std::vector<GroupElem> out;
  for (const auto& a : g_->elements())
    for (const auto& b : h_->elements()) out.push_back(pair(a, b));
  return out;
}

// ---------------------------------------------------------------------------

Cocycle::Cocycle(GroupPtr group, const Presentation& p, const std::map<std::string, GroupElem>& labels)
    : group_(std::move(group)) {
  labels_.assign(static_cast<std::size_t>(p.num_edges()), group_->identity());
  for (const auto& [id, g] : labels) {
    auto e = p.find_edge(id);
    if (!e) fail(ErrorCode::kUnknownName, "cocycle labels unknown edge '" + id + "'");
    labels_[static_cast<std::size_t>(*e)] = g;
  }
  for (const auto& s : p.square_indices()) {
    GroupElem lhs = group_->multiply(edge(s.i_edge), edge(s.j_edge));
    GroupElem rhs = group_->multiply(edge(s.j_prime), edge(s.i_prime));
    if (lhs != rhs)
      fail(ErrorCode::kNonFunctorialCocycle,
           "c(" + p.edge_name(s.i_edge) + ")c(" + p.edge_name(s.j_edge) + ") = " + group_->format(lhs) + " but c(" +
               p.edge_name(s.j_prime) + ")c(" + p.edge_name(s.i_prime) + ") = " + group_->format(rhs));
  }
}

GroupElem Cocycle::of_word(const std::vector<int>& word) const {
  GroupElem g = group_->identity();
  for (int e : word) g = group_->multiply(g, edge(e));
  return g;
}

GroupElem Cocycle::of(const Morphism& m) const { return of_word(m.word); }

Cocycle degree_cocycle(const Presentation& p) {
  auto g = std::make_shared<AbelianGroup>(p.rank());
  std::map<std::string, GroupElem> labels;
  for (const Edge& e : p.edges()) labels[e.id] = Degree::unit(p.rank(), e.color).values();
  return Cocycle(g, p, labels);
}

Cocycle pair_with_degree(const Presentation& p, const Cocycle& c) {
  auto g = std::make_shared<ProductGroup>(c.group_ptr(), std::make_shared<AbelianGroup>(p.rank()));
  std::map<std::string, GroupElem> labels;
  for (int e = 0; e < p.num_edges(); ++e)
    labels[p.edge_name(e)] = ProductGroup::pair(c.edge(e), Degree::unit(p.rank(), p.color(e)).values());
  return Cocycle(g, p, labels);
}

}  // namespace hrg
