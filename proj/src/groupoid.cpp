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

#include "hrg/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

namespace hrg {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// ---------------------------------------------------------------------------
// Presentations

Word GroupPresentation::word_of(const std::vector<int>& edge_word) const {
  Word w;
  for (int e : edge_word) {
    int g = edge_letter.at(idx(e));
    if (g != 0) w.push_back(g);
  }
  return w;
}

std::string GroupPresentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += generators.at(idx(std::abs(w[i]) - 1));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

namespace {

// Spanning forest version; `components` receives the number of trees.
GroupPresentation forest_presentation(const Presentation& p, int* components) {
  GroupPresentation gp;
  int n = p.num_vertices();
  std::vector<int> order(idx(n));
  for (int v = 0; v < n; ++v) order[idx(v)] = v;
  std::sort(order.begin(), order.end(), [&p](int a, int b) { return p.vertex_name(a) < p.vertex_name(b); });
  std::vector<std::vector<int>> incident(idx(n));
  for (int v = 0; v < n; ++v) {
    auto& list = incident[idx(v)];
    list = p.in_edges(v);
    for (int e : p.out_edges(v))
      if (p.rng(e) != v) list.push_back(e);
    std::sort(list.begin(), list.end(), [&p](int a, int b) { return p.edge_name(a) < p.edge_name(b); });
  }
  std::vector<char> seen(idx(n), 0), tree(idx(p.num_edges()), 0);
  int comps = 0;
  for (int root : order) {
    if (seen[idx(root)]) continue;
    ++comps;
    std::deque<int> q{root};
    seen[idx(root)] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int e : incident[idx(x)]) {
        int y = p.rng(e) == x ? p.src(e) : p.rng(e);
        if (seen[idx(y)]) continue;
        seen[idx(y)] = 1;
        tree[idx(e)] = 1;
        q.push_back(y);
      }
    }
  }
  if (components) *components = comps;
  gp.basepoint = n > 0 ? p.vertex_name(order[0]) : "";
  gp.edge_letter.assign(idx(p.num_edges()), 0);
  for (int e = 0; e < p.num_edges(); ++e) {
    if (tree[idx(e)]) {
      gp.tree_edges.push_back(p.edge_name(e));
    } else {
      gp.generators.push_back(p.edge_name(e));
      gp.edge_letter[idx(e)] = static_cast<int>(gp.generators.size());
    }
  }
  for (const auto& s : p.square_indices()) {
    Word w;
    auto push = [&](int e, int sign) {
      int g = gp.edge_letter[idx(e)];
      if (g) w.push_back(sign * g);
    };
    push(s.i_edge, 1);
    push(s.j_edge, 1);
    push(s.i_prime, -1);
    push(s.j_prime, -1);
    w = free_reduce(w);
    if (!w.empty()) gp.relators.push_back(std::move(w));
  }
  return gp;
}

}  // namespace

GroupPresentation fundamental_group_presentation(const Presentation& p, const std::string& basepoint) {
  int comps = 0;
  GroupPresentation gp = forest_presentation(p, &comps);
  if (comps > 1) fail(ErrorCode::kDisconnected, "presentation has " + std::to_string(comps) + " components");
  if (!basepoint.empty()) {
    p.vertex_index(basepoint);
    gp.basepoint = basepoint;
  }
  return gp;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::string AbelianInvariants::str() const {
  std::string s = "Z^" + std::to_string(rank);
  for (long long t : torsion) s += " + Z/" + std::to_string(t);
  return s;
}

namespace {

using I64 = long long;

I64 checked_sub_mul(I64 a, I64 q, I64 b) {
  I64 prod, out;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    fail(ErrorCode::kInternal, "integer overflow in Smith normal form");
  return out;
}

I64 floor_div(I64 a, I64 b) {
  I64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

AbelianInvariants abelianized_invariants(const GroupPresentation& gp,
                                         std::vector<std::vector<long long>>* generator_images) {
  std::size_t m = gp.relators.size();
  std::size_t n = gp.generators.size();
  std::vector<std::vector<I64>> a(m, std::vector<I64>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (int x : gp.relators[i]) a[i][idx(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  std::vector<std::vector<I64>> v(n, std::vector<I64>(n, 0));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  auto col_op = [&](std::size_t j, I64 q, std::size_t t) {  // col_j -= q col_t
    for (auto& row : a) row[j] = checked_sub_mul(row[j], q, row[t]);
    for (auto& row : v) row[j] = checked_sub_mul(row[j], q, row[t]);
  };

  std::vector<I64> diag;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      std::swap(a[t], a[pi]);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        I64 q = floor_div(a[i][t], a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] = checked_sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, floor_div(a[t][j], a[t][t]), t);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] = checked_sub_mul(a[t][j], -1, a[bad][j]);
    }
    if (a[t][t] == 0) break;
    if (a[t][t] < 0) {
      for (auto& row : a) row[t] = -row[t];
      for (auto& row : v) row[t] = -row[t];
    }
    diag.push_back(a[t][t]);
  }

  AbelianInvariants out;
  std::vector<std::size_t> free_cols, torsion_cols;
  for (std::size_t j = 0; j < n; ++j) {
    I64 d = j < diag.size() ? diag[j] : 0;
    if (d == 0) free_cols.push_back(j);
    else if (d > 1) {
      torsion_cols.push_back(j);
      out.torsion.push_back(d);
    }
  }
  out.rank = static_cast<int>(free_cols.size());
  if (generator_images) {
    generator_images->assign(n, {});
    for (std::size_t g = 0; g < n; ++g) {
      auto& img = (*generator_images)[g];
      for (std::size_t c : free_cols) img.push_back(v[g][c]);
      for (std::size_t c : torsion_cols) {
        I64 d = diag[c];
        img.push_back(((v[g][c] % d) + d) % d);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Essential cocycles

std::optional<std::pair<Morphism, Morphism>> injectivity_violation(const Presentation& p, const Cocycle& c,
                                                                    const Degree& bound) {
  auto degrees = degrees_up_to(bound);
  for (int u = 0; u < p.num_vertices(); ++u)
    for (const Degree& n : degrees) {
      if (n.is_zero()) continue;
      std::map<std::pair<int, GroupElem>, Morphism> seen;
      for (auto& m : morphisms_from(p, u, n)) {
        auto key = std::make_pair(m.source, c.of(m));
        auto [it, inserted] = seen.emplace(key, m);
        if (!inserted) return std::make_pair(it->second, m);
      }
    }
  return std::nullopt;
}

namespace {

// Largest number of color-c edges on any path, for acyclic p.
bool all_paths_within(const Presentation& p, const Degree& bound) {
  int n = p.num_vertices();
  // Kahn order along r -> s.
  std::vector<int> indeg(idx(n), 0);
  for (int e = 0; e < p.num_edges(); ++e) ++indeg[idx(p.src(e))];
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (indeg[idx(v)] == 0) order.push_back(v);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int e : p.in_edges(order[h]))
      if (--indeg[idx(p.src(e))] == 0) order.push_back(p.src(e));
  if (static_cast<int>(order.size()) != n) return false;
  for (int c = 1; c <= p.rank(); ++c) {
    std::vector<int> best(idx(n), 0);
    for (int v : order)
      for (int e : p.in_edges(v)) {
        int w = p.src(e);
        best[idx(w)] = std::max(best[idx(w)], best[idx(v)] + (p.color(e) == c ? 1 : 0));
      }
    for (int x : best)
      if (x > bound[c - 1]) return false;
  }
  return true;
}

}  // namespace

std::optional<EssentialCocycle> essential_cocycle_search(const Presentation& p, const Degree& degree_bound,
                                                         const std::optional<Cocycle>& hint) {
  if (degree_bound.rank() != p.rank()) fail(ErrorCode::kDegreeOutOfRange, "degree bound has the wrong rank");
  bool acyclic_exact = all_paths_within(p, degree_bound);
  auto accept = [&](Cocycle c, std::string source, std::string note) -> std::optional<EssentialCocycle> {
    if (injectivity_violation(p, c, degree_bound)) return std::nullopt;
    EssentialCocycle out;
    out.cocycle = std::move(c);
    out.source = std::move(source);
    out.checked_up_to = degree_bound;
    out.exact = acyclic_exact;
    out.note = std::move(note);
    return out;
  };

  if (p.rank() == 1) {
    auto g = std::make_shared<FreeGroup>(p.num_edges());
    std::map<std::string, GroupElem> labels;
    for (int e = 0; e < p.num_edges(); ++e) labels[p.edge_name(e)] = FreeGroup::generator(e);
    auto r = accept(Cocycle(g, p, labels), "free",
                    "each edge is a distinct free generator; distinct paths are distinct positive words");
    if (r) {
      r->exact = true;
      return r;
    }
  }
  std::string bounded = "paired with the degree; injectivity checked on every uLambda^n v with n <= " +
                        degree_bound.str();
  if (hint) {
    auto r = accept(pair_with_degree(p, *hint), "hint", bounded);
    if (r) return r;
  }
  int comps = 0;
  GroupPresentation gp = forest_presentation(p, &comps);
  std::vector<std::vector<long long>> images;
  AbelianInvariants inv = abelianized_invariants(gp, &images);
  std::vector<int> torsion;
  for (long long t : inv.torsion) {
    if (t > 1000000000LL) return std::nullopt;
    torsion.push_back(static_cast<int>(t));
  }
  auto ab = std::make_shared<AbelianGroup>(inv.rank, torsion);
  std::map<std::string, GroupElem> labels;
  for (int e = 0; e < p.num_edges(); ++e) {
    int g = gp.edge_letter[idx(e)];
    if (!g) continue;
    GroupElem x;
    for (long long y : images[idx(g - 1)]) x.push_back(static_cast<int>(y));
    labels[p.edge_name(e)] = ab->reduce(x);
  }
  return accept(pair_with_degree(p, Cocycle(ab, p, labels)), "abelian", bounded);
}

// ---------------------------------------------------------------------------
// Completion

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
    return h;
  }
};

int letter_rank(int x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return false;
}

struct RuleUse {
  int rule;
  std::size_t pos;
  bool reversed;
};

struct Rule {
  Word lhs, rhs;
  int height = 0;
  std::optional<ProofStep> base;
  std::vector<RuleUse> deriv;
};

struct Pending {
  int height;
  std::size_t len;
  std::uint64_t counter;
  int a, b;       // overlap of rule a's lhs suffix with rule b's lhs prefix
  std::size_t k;  // overlap length; 0 marks an explicit equation
  int eq = -1;
  bool operator>(const Pending& o) const {
    if (height != o.height) return height > o.height;
    if (len != o.len) return len > o.len;
    return counter > o.counter;
  }
};

struct Equation {
  Word lhs, rhs;  // with lhs -> rhs derivation
  std::vector<RuleUse> deriv;
};

constexpr std::size_t kMaxProofSteps = 5'000'000;

class Completion {
 public:
  Completion(int ngens, const std::vector<Word>& relators, int max_len, std::size_t max_added)
      : max_len_(static_cast<std::size_t>(max_len)), max_added_(max_added) {
    for (int g = 1; g <= ngens; ++g)
      for (int s : {1, -1}) {
        Word l{s * g, -s * g};
        add_rule(l, {}, 0, ProofStep{0, l, {}, -1}, {});
      }
    std::vector<std::tuple<Word, Word, int>> eqs;
    for (std::size_t ri = 0; ri < relators.size(); ++ri)
      for (const Word& rr : {relators[ri], invert_word(relators[ri])}) {
        std::size_t n = rr.size();
        for (std::size_t k = 0; k < n; ++k) {
          Word c(rr.begin() + static_cast<std::ptrdiff_t>(k), rr.end());
          c.insert(c.end(), rr.begin(), rr.begin() + static_cast<std::ptrdiff_t>(k));
          for (std::size_t i = 1; i <= n; ++i) {
            Word u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            Word v = invert_word(Word(c.begin() + static_cast<std::ptrdiff_t>(i), c.end()));
            eqs.emplace_back(u, v, static_cast<int>(ri));
          }
        }
      }
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end(),
                          [](const auto& x, const auto& y) { return std::get<0>(x) == std::get<0>(y) && std::get<1>(x) == std::get<1>(y); }),
              eqs.end());
    for (auto& [u, v, ri] : eqs) {
      if (u == v) continue;
      Word big = u, small = v;
      if (shortlex_less(u, v)) std::swap(big, small);
      if (big.size() > max_len_) continue;
      ProofStep step{0, big, small, ri};
      auto it = index_.find(big);
      if (it == index_.end()) {
        add_rule(big, small, 0, step, {});
      } else if (rules_[idx(it->second)].rhs != small) {
        // Same left side, different right side: keep as an equation between
        // the two right sides, derived through the shared left side.
        int seed = static_cast<int>(rules_.size());
        rules_.push_back(Rule{big, small, 0, step, {}});
        extra_.push_back(Equation{rules_[idx(it->second)].rhs, small,
                                  {RuleUse{it->second, 0, true}, RuleUse{seed, 0, false}}});
        push(Pending{1, std::max(small.size(), rules_[idx(it->second)].rhs.size()), counter_++, -1, -1, 0,
                     static_cast<int>(extra_.size() - 1)});
      }
    }
    for (std::size_t r = 0; r < rules_.size(); ++r)
      if (live(static_cast<int>(r))) overlaps(static_cast<int>(r), static_cast<int>(r) + 1);
  }

  /// Processes pending pairs of height <= h. Returns false once the rule
  /// budget is spent.
  bool run_round(int h) {
    while (!pending_.empty() && pending_.top().height <= h) {
      if (added_ >= max_added_) return false;
      Pending pd = pending_.top();
      pending_.pop();
      process(pd);
    }
    return true;
  }

  bool exhausted() const { return pending_.empty(); }
  std::size_t num_rules() const { return index_.size(); }

  Word reduce(Word w, std::vector<RuleUse>* uses) const {
    std::size_t i = 0;
    while (i < w.size()) {
      bool applied = false;
      for (std::size_t len = 1; len <= max_len_ && i + len <= w.size(); ++len) {
        Word sub(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
        auto it = index_.find(sub);
        if (it == index_.end()) continue;
        const Rule& r = rules_[idx(it->second)];
        if (uses) uses->push_back(RuleUse{it->second, i, false});
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), r.rhs.begin(), r.rhs.end());
        i = i >= max_len_ ? i - max_len_ : 0;
        applied = true;
        break;
      }
      if (!applied) ++i;
    }
    return w;
  }

  std::vector<ProofStep> expand(const std::vector<RuleUse>& uses) {
    std::vector<ProofStep> out;
    for (const RuleUse& u : uses) append_use(u, out);
    return out;
  }

 private:
  bool live(int r) const {
    auto it = index_.find(rules_[idx(r)].lhs);
    return it != index_.end() && it->second == r;
  }

  void push(Pending p) { pending_.push(p); }

  int add_rule(Word lhs, Word rhs, int height, std::optional<ProofStep> base, std::vector<RuleUse> deriv) {
    int id = static_cast<int>(rules_.size());
    rules_.push_back(Rule{lhs, std::move(rhs), height, std::move(base), std::move(deriv)});
    index_[lhs] = id;
    return id;
  }

  // Enqueue overlaps between rule r and rules [0, upto), plus itself.
  void overlaps(int r, int upto) {
    for (int l = 0; l < upto; ++l) {
      if (!live(l)) continue;
      for (auto [x, y] : {std::pair<int, int>{r, l}, std::pair<int, int>{l, r}}) {
        const Word& a = rules_[idx(x)].lhs;
        const Word& b = rules_[idx(y)].lhs;
        int h = std::max(rules_[idx(x)].height, rules_[idx(y)].height) + 1;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
          std::size_t l1 = rules_[idx(x)].rhs.size() + b.size() - k;
          std::size_t l2 = a.size() - k + rules_[idx(y)].rhs.size();
          push(Pending{h, std::max(l1, l2), counter_++, x, y, k, -1});
        }
        if (x == y) break;
      }
    }
  }

  static void flip(std::vector<RuleUse>& path) {
    std::reverse(path.begin(), path.end());
    for (auto& u : path) u.reversed = !u.reversed;
  }

  void process(const Pending& pd) {
    Word w1, w2;
    std::vector<RuleUse> path;  // from w1 to w2
    if (pd.eq >= 0) {
      const Equation& e = extra_[idx(pd.eq)];
      std::vector<RuleUse> u1, u2;
      w1 = reduce(e.lhs, &u1);
      w2 = reduce(e.rhs, &u2);
      flip(u1);
      path = u1;
      path.insert(path.end(), e.deriv.begin(), e.deriv.end());
      path.insert(path.end(), u2.begin(), u2.end());
    } else {
      const Rule& A = rules_[idx(pd.a)];
      const Rule& B = rules_[idx(pd.b)];
      std::size_t cut = A.lhs.size() - pd.k;
      Word x1 = A.rhs;
      x1.insert(x1.end(), B.lhs.begin() + static_cast<std::ptrdiff_t>(pd.k), B.lhs.end());
      Word x2(A.lhs.begin(), A.lhs.begin() + static_cast<std::ptrdiff_t>(cut));
      x2.insert(x2.end(), B.rhs.begin(), B.rhs.end());
      std::vector<RuleUse> u1, u2;
      w1 = reduce(x1, &u1);
      w2 = reduce(x2, &u2);
      flip(u1);
      path = u1;
      path.push_back(RuleUse{pd.a, 0, true});
      path.push_back(RuleUse{pd.b, cut, false});
      path.insert(path.end(), u2.begin(), u2.end());
    }
    if (w1 == w2) return;
    if (shortlex_less(w1, w2)) {
      std::swap(w1, w2);
      flip(path);
    }
    if (w1.size() > max_len_) return;
    int id = add_rule(w1, w2, pd.height, std::nullopt, std::move(path));
    ++added_;
    overlaps(id, id);
  }

  const std::vector<ProofStep>& expansion(int r) {
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    std::vector<ProofStep> out;
    const Rule& rule = rules_[idx(r)];
    if (rule.base) {
      out.push_back(*rule.base);
    } else {
      for (const RuleUse& u : rule.deriv) append_use(u, out);
    }
    return cache_.emplace(r, std::move(out)).first->second;
  }

  void append_use(const RuleUse& u, std::vector<ProofStep>& out) {
    const auto& steps = expansion(u.rule);
    if (out.size() + steps.size() > kMaxProofSteps) fail(ErrorCode::kInternal, "collapse proof too large to expand");
    if (!u.reversed) {
      for (const auto& s : steps) out.push_back(ProofStep{s.pos + u.pos, s.from, s.to, s.relator});
    } else {
      for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        out.push_back(ProofStep{it->pos + u.pos, it->to, it->from, it->relator});
    }
  }

  std::size_t max_len_;
  std::size_t max_added_;
  std::size_t added_ = 0;
  std::uint64_t counter_ = 0;
  std::vector<Rule> rules_;
  std::vector<Equation> extra_;
  std::unordered_map<Word, int, WordHash> index_;
  std::priority_queue<Pending, std::vector<Pending>, std::greater<Pending>> pending_;
  std::unordered_map<int, std::vector<ProofStep>> cache_;
};

std::vector<std::string> edge_ids(const Presentation& p, const Morphism& m) {
  std::vector<std::string> out;
  for (int e : m.word) out.push_back(p.edge_name(e));
  return out;
}

}  // namespace

std::optional<CollapseProof> collapse_search(const Presentation& p, int depth) {
  if (depth < 1) return std::nullopt;
  int comps = 0;
  GroupPresentation gp = forest_presentation(p, &comps);

  struct Candidate {
    Morphism m;
    std::vector<std::string> ids;
    Word word;
  };
  std::vector<std::vector<Candidate>> by_degree;
  Degree two = Degree::ones(p.rank()) + Degree::ones(p.rank());
  // By total, then most balanced first: mixed degrees are where squares
  // act directly.
  auto degrees = degrees_up_to(two);
  auto spread = [](const Degree& d) { return *std::max_element(d.values().begin(), d.values().end()); };
  std::stable_sort(degrees.begin(), degrees.end(), [&spread](const Degree& a, const Degree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return spread(a) < spread(b);
  });
  for (const Degree& n : degrees) {
    if (n.is_zero()) continue;
    std::vector<Candidate> list;
    for (int u = 0; u < p.num_vertices(); ++u)
      for (auto& m : morphisms_from(p, u, n)) {
        Candidate c{m, edge_ids(p, m), gp.word_of(m.word)};
        list.push_back(std::move(c));
      }
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) { return a.ids < b.ids; });
    by_degree.push_back(std::move(list));
  }

  Completion kb(static_cast<int>(gp.generators.size()), gp.relators, depth, static_cast<std::size_t>(64) * depth);
  for (int round = 1; round <= depth; ++round) {
    bool budget = kb.run_round(round);
    for (const auto& list : by_degree) {
      std::map<std::tuple<int, int, Word>, std::size_t> first;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Candidate& c = list[i];
        auto key = std::make_tuple(c.m.range, c.m.source, kb.reduce(c.word, nullptr));
        auto [it, inserted] = first.emplace(key, i);
        if (inserted) continue;
        // The earliest element with a partner is found at its first
        // partner, since partners sort after it.
        std::size_t a = it->second;
        std::size_t b = i;
        for (std::size_t j = 0; j < i; ++j) {
          auto kj = std::make_tuple(list[j].m.range, list[j].m.source, kb.reduce(list[j].word, nullptr));
          bool has_partner = false;
          std::size_t partner = 0;
          for (std::size_t t = j + 1; t < list.size(); ++t) {
            if (list[t].m.range != list[j].m.range || list[t].m.source != list[j].m.source) continue;
            if (kb.reduce(list[t].word, nullptr) == std::get<2>(kj)) {
              has_partner = true;
              partner = t;
              break;
            }
          }
          if (has_partner) {
            a = j;
            b = partner;
            break;
          }
        }
        CollapseProof proof;
        proof.lhs = list[a].m;
        proof.rhs = list[b].m;
        proof.lhs_edges = list[a].ids;
        proof.rhs_edges = list[b].ids;
        proof.start = list[a].word;
        proof.end = list[b].word;
        std::vector<RuleUse> u1, u2;
        kb.reduce(proof.start, &u1);
        kb.reduce(proof.end, &u2);
        proof.steps = kb.expand(u1);
        auto back = kb.expand(u2);
        for (auto s = back.rbegin(); s != back.rend(); ++s) proof.steps.push_back(ProofStep{s->pos, s->to, s->from, s->relator});
        proof.round = round;
        proof.rules = kb.num_rules();
        return proof;
      }
    }
    if (!budget || kb.exhausted()) break;
  }
  return std::nullopt;
}

ReplayResult replay_collapse_proof(const Presentation& p, const CollapseProof& proof) {
  ReplayResult res;
  auto bad = [&res](std::string m) {
    res.ok = false;
    res.message = std::move(m);
    return res;
  };
  int comps = 0;
  GroupPresentation gp = forest_presentation(p, &comps);
  std::vector<int> lw, rw;
  for (const auto& id : proof.lhs_edges) lw.push_back(p.edge_index(id));
  for (const auto& id : proof.rhs_edges) rw.push_back(p.edge_index(id));
  if (lw.empty() || rw.empty()) return bad("endpoints must be paths of positive length");
  Morphism l = canonical_form(p, lw);
  Morphism r = canonical_form(p, rw);
  if (l.word != lw || r.word != rw) return bad("endpoints are not in canonical form");
  if (l == r) return bad("endpoints are the same morphism");
  if (l.range != r.range || l.source != r.source) return bad("endpoints are not parallel");
  if (l.degree != r.degree) return bad("endpoints have different degrees");
  Word w = gp.word_of(l.word);
  Word target = gp.word_of(r.word);
  if (w != proof.start || target != proof.end) return bad("endpoint words do not match the presentation");

  auto is_relator_rotation = [&gp](const Word& c) {
    for (const Word& rel : gp.relators)
      for (const Word& rr : {rel, invert_word(rel)}) {
        if (rr.size() != c.size()) continue;
        for (std::size_t k = 0; k < rr.size(); ++k)
          if (std::equal(rr.begin() + static_cast<std::ptrdiff_t>(k), rr.end(), c.begin()) &&
              std::equal(rr.begin(), rr.begin() + static_cast<std::ptrdiff_t>(k),
                         c.begin() + static_cast<std::ptrdiff_t>(rr.size() - k)))
            return true;
      }
    return false;
  };
  for (std::size_t n = 0; n < proof.steps.size(); ++n) {
    const ProofStep& s = proof.steps[n];
    if (s.pos + s.from.size() > w.size() ||
        !std::equal(s.from.begin(), s.from.end(), w.begin() + static_cast<std::ptrdiff_t>(s.pos)))
      return bad("step " + std::to_string(n) + " does not match the current word");
    Word c = s.from;
    Word ti = invert_word(s.to);
    c.insert(c.end(), ti.begin(), ti.end());
    bool legal = s.relator < 0 ? free_reduce(c).empty() : is_relator_rotation(c);
    if (!legal) return bad("step " + std::to_string(n) + " is not a relator or free cancellation");
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(s.pos), w.begin() + static_cast<std::ptrdiff_t>(s.pos + s.from.size()));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.pos), s.to.begin(), s.to.end());
  }
  if (w != target) return bad("proof does not end at the second morphism");
  res.ok = true;
  res.message = "replayed " + std::to_string(proof.steps.size()) + " steps";
  return res;
}

// ---------------------------------------------------------------------------

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

// Tietze elimination: a generator occurring exactly once in some relator is
// solved for and substituted everywhere. Returns the surviving generators
// renumbered 1..m with their relators.
std::pair<int, std::vector<Word>> eliminate_generators(int ngens, std::vector<Word> rels) {
  constexpr std::size_t kMaxTotal = 1'000'000;
  std::vector<char> gone(idx(ngens + 1), 0);
  for (auto& r : rels) r = cyclic_reduce(r);
  while (true) {
    std::size_t best = rels.size(), pos = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (rels[i].empty() || (best < rels.size() && rels[i].size() >= rels[best].size())) continue;
      std::map<int, int> count;
      for (int x : rels[i]) ++count[std::abs(x)];
      for (std::size_t j = 0; j < rels[i].size(); ++j)
        if (count[std::abs(rels[i][j])] == 1) {
          best = i;
          pos = j;
          break;
        }
    }
    if (best == rels.size()) break;
    // Rotate so the letter leads: x w = 1, so x = w^-1 (and x^-1 = w).
    Word r = rels[best];
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    int x = r[0];
    Word rest(r.begin() + 1, r.end());
    Word image = x > 0 ? invert_word(rest) : rest;  // image of generator |x|
    Word image_inv = invert_word(image);
    int g = std::abs(x);
    gone[idx(g)] = 1;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best));
    std::size_t total = 0;
    for (auto& w : rels) {
      Word out;
      for (int y : w) {
        if (std::abs(y) != g) out.push_back(y);
        else {
          const Word& sub = y > 0 ? image : image_inv;
          out.insert(out.end(), sub.begin(), sub.end());
        }
      }
      w = cyclic_reduce(out);
      total += w.size();
    }
    if (total > kMaxTotal) break;
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }), rels.end());
  }
  std::vector<int> renum(idx(ngens + 1), 0);
  int m = 0;
  for (int g = 1; g <= ngens; ++g)
    if (!gone[idx(g)]) renum[idx(g)] = ++m;
  for (auto& w : rels)
    for (int& y : w) y = y > 0 ? renum[idx(y)] : -renum[idx(-y)];
  return {m, rels};
}

}  // namespace

SimplyConnectedResult simply_connected_test(const Presentation& p, int depth, bool windowed) {
  SimplyConnectedResult res;
  res.window_caveat = windowed;
  GroupPresentation gp = fundamental_group_presentation(p);
  res.abelian = abelianized_invariants(gp);
  if (!res.abelian.trivial()) {
    res.verdict = TriState::kNo;
    res.reason = "abelianized fundamental group is " + res.abelian.str();
    return res;
  }
  if (gp.generators.empty()) {
    res.verdict = TriState::kYes;
    res.reason = "spanning tree covers every edge";
    return res;
  }
  auto [left, rels] = eliminate_generators(static_cast<int>(gp.generators.size()), gp.relators);
  if (left == 0) {
    res.verdict = TriState::kYes;
    res.reason = "Tietze elimination removes every generator";
    return res;
  }
  Completion kb(left, rels, std::max(depth, 1),
                static_cast<std::size_t>(64) * static_cast<std::size_t>(std::max(depth, 1)));
  auto all_trivial = [&]() {
    for (int g = 1; g <= left; ++g)
      if (!kb.reduce(Word{g}, nullptr).empty()) return false;
    return true;
  };
  if (all_trivial()) {
    res.verdict = TriState::kYes;
    res.reason = "every generator reduces to the identity";
    return res;
  }
  for (int round = 1; round <= depth; ++round) {
    bool budget = kb.run_round(round);
    if (all_trivial()) {
      res.verdict = TriState::kYes;
      res.reason = "every generator reduces to the identity after " + std::to_string(round) + " rounds";
      return res;
    }
    if (!budget || kb.exhausted()) break;
  }
  res.verdict = TriState::kUnknown;
  res.reason = "abelianization trivial; completion to depth " + std::to_string(depth) + " did not trivialize all generators";
  return res;
}

Grading grading_function(const Presentation& p) {
  Grading g;
  int n = p.num_vertices();
  if (n == 0) {
    g.ok = true;
    return g;
  }
  std::vector<std::optional<Degree>> f(idx(n));
  g.base = p.vertex_name(0);
  f[0] = Degree(p.rank());
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e : p.in_edges(x))
      if (!f[idx(p.src(e))]) {
        f[idx(p.src(e))] = *f[idx(x)] + Degree::unit(p.rank(), p.color(e));
        q.push_back(p.src(e));
      }
    for (int e : p.out_edges(x))
      if (!f[idx(p.rng(e))]) {
        f[idx(p.rng(e))] = *f[idx(x)] - Degree::unit(p.rank(), p.color(e));
        q.push_back(p.rng(e));
      }
  }
  for (int v = 0; v < n; ++v)
    if (!f[idx(v)]) fail(ErrorCode::kDisconnected, "vertex '" + p.vertex_name(v) + "' is unreachable");
  for (int e = 0; e < p.num_edges(); ++e)
    if (*f[idx(p.src(e))] != *f[idx(p.rng(e))] + Degree::unit(p.rank(), p.color(e))) {
      g.witness_edge = p.edge_name(e);
      return g;
    }
  g.ok = true;
  for (auto& x : f) g.values.push_back(*x);
  return g;
}

// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kEmbeds: return "Embeds";
    case Verdict::kNotEmbeds: return "NotEmbeds";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

EmbeddabilityReport embeddability_report(const Presentation& p, int depth, const Degree& degree_bound,
                                         const std::optional<Cocycle>& hint) {
  EmbeddabilityReport rep;
  rep.depth = depth;
  rep.degree_bound = degree_bound;
  int comps = 0;
  GroupPresentation gp = forest_presentation(p, &comps);
  if (comps <= 1) {
    rep.abelian = abelianized_invariants(gp);
    rep.abelian_available = true;
  }
  if (p.rank() == 1) {
    rep.cocycle = essential_cocycle_search(p, degree_bound);
    rep.verdict = Verdict::kEmbeds;
    rep.reason = "free-cocycle";
    rep.note = "1-graphs always embed; the free cocycle is essential";
    return rep;
  }
  auto conn = connectivity_report(p);
  rep.singly_connected = conn.singly_connected;
  rep.singly_connected_witness = conn.witness;
  if (conn.singly_connected == TriState::kYes) {
    rep.verdict = Verdict::kEmbeds;
    rep.reason = "singly-connected";
    return rep;
  }
  if (auto c = essential_cocycle_search(p, degree_bound, hint)) {
    rep.verdict = Verdict::kEmbeds;
    rep.reason = "essential-cocycle";
    rep.cocycle = std::move(c);
    if (!rep.cocycle->exact)
      rep.note = "cocycle verified injective on each uLambda^n v up to the degree bound, not beyond";
    return rep;
  }
  if (auto proof = collapse_search(p, depth)) {
    rep.verdict = Verdict::kNotEmbeds;
    rep.reason = "collapse";
    rep.proof = std::move(proof);
    return rep;
  }
  rep.verdict = Verdict::kInconclusive;
  rep.reason = "none";
  rep.note = "no essential cocycle among the candidates and no collapse within depth " + std::to_string(depth);
  return rep;
}

}  // namespace hrg
