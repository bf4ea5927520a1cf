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

#include "hrg/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace hrg {

Presentation::Presentation(int k, std::vector<std::string> vertices, std::vector<Edge> edges,
                           std::vector<Square> squares)
    : k_(k), vertices_(std::move(vertices)), edges_(std::move(edges)), squares_(std::move(squares)) {
  if (k_ < 1) fail(ErrorCode::kMalformedInput, "rank must be >= 1");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vindex_.emplace(vertices_[i], static_cast<int>(i)).second)
      fail(ErrorCode::kMalformedInput, "duplicate vertex id '" + vertices_[i] + "'");
  }
  in_.resize(vertices_.size());
  out_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!eindex_.emplace(e.id, static_cast<int>(i)).second)
      fail(ErrorCode::kMalformedInput, "duplicate edge id '" + e.id + "'");
    if (e.color < 1 || e.color > k_)
      fail(ErrorCode::kColorOutOfRange,
           "edge '" + e.id + "' has color " + std::to_string(e.color) + " outside 1.." +
               std::to_string(k_));
    auto s = vindex_.find(e.src);
    auto r = vindex_.find(e.rng);
    if (s == vindex_.end() || r == vindex_.end())
      fail(ErrorCode::kMalformedInput, "edge '" + e.id + "' references an undeclared vertex");
    color_.push_back(e.color);
    src_.push_back(s->second);
    rng_.push_back(r->second);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    in_[static_cast<std::size_t>(rng_[i])].push_back(static_cast<int>(i));
    out_[static_cast<std::size_t>(src_[i])].push_back(static_cast<int>(i));
  }
  auto by_id = [this](int a, int b) {
    return edges_[static_cast<std::size_t>(a)].id < edges_[static_cast<std::size_t>(b)].id;
  };
  for (auto& list : in_) std::sort(list.begin(), list.end(), by_id);
  for (auto& list : out_) std::sort(list.begin(), list.end(), by_id);

  auto lookup = [this](const std::string& id) {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) fail(ErrorCode::kMalformedInput, "square references unknown edge '" + id + "'");
    return it->second;
  };
  for (const Square& sq : squares_) {
    SquareIdx s{lookup(sq.i_edge), lookup(sq.j_edge), lookup(sq.j_prime), lookup(sq.i_prime)};
    square_idx_.push_back(s);
    std::uint64_t fk = key(s.i_edge, s.j_edge);
    std::uint64_t bk = key(s.j_prime, s.i_prime);
    fwd_.emplace(fk, std::make_pair(s.j_prime, s.i_prime));
    bwd_.emplace(bk, std::make_pair(s.i_edge, s.j_edge));
    ++fwd_count_[fk];
    ++bwd_count_[bk];
  }
}

int Presentation::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) fail(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::optional<int> Presentation::find_vertex(std::string_view id) const {
  auto it = vindex_.find(std::string(id));
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

int Presentation::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) fail(ErrorCode::kMalformedInput, "unknown edge '" + std::string(id) + "'");
  return *e;
}

std::optional<int> Presentation::find_edge(std::string_view id) const {
  auto it = eindex_.find(std::string(id));
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> Presentation::forward(int e, int f) const {
  auto it = fwd_.find(key(e, f));
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> Presentation::backward(int f_prime, int e_prime) const {
  auto it = bwd_.find(key(f_prime, e_prime));
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

int Presentation::forward_multiplicity(int e, int f) const {
  auto it = fwd_count_.find(key(e, f));
  return it == fwd_count_.end() ? 0 : it->second;
}

int Presentation::backward_multiplicity(int f_prime, int e_prime) const {
  auto it = bwd_count_.find(key(f_prime, e_prime));
  return it == bwd_count_.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

ValidationReport failure(ValidationReport r, std::string kind, std::vector<std::string> witness,
                         std::string detail) {
  r.pass = false;
  r.failure = std::move(kind);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

ValidationReport validate_presentation(const Presentation& p, ValidationMode mode) {
  ValidationReport rep;
  rep.partial = mode == ValidationMode::kPartial;
  auto name = [&p](int e) { return p.edge_name(e); };

  for (const auto& s : p.square_indices()) {
    ++rep.squares_checked;
    std::vector<std::string> ids{name(s.i_edge), name(s.j_edge), name(s.j_prime), name(s.i_prime)};
    int ci = p.color(s.i_edge);
    int cj = p.color(s.j_edge);
    if (p.color(s.i_prime) != ci || p.color(s.j_prime) != cj || ci >= cj)
      return failure(rep, "square_incidence", ids, "square colors do not match i_edge,i_prime < j_edge,j_prime");
    if (p.src(s.i_edge) != p.rng(s.j_edge) || p.rng(s.j_prime) != p.rng(s.i_edge) ||
        p.src(s.j_prime) != p.rng(s.i_prime) || p.src(s.i_prime) != p.src(s.j_edge))
      return failure(rep, "square_incidence", ids, "square sides are not composable paths with common ends");
    if (p.forward_multiplicity(s.i_edge, s.j_edge) > 1)
      return failure(rep, "square_not_bijective", {ids[0], ids[1]},
                     "composable pair has more than one square");
    if (p.backward_multiplicity(s.j_prime, s.i_prime) > 1)
      return failure(rep, "square_not_bijective", {ids[2], ids[3]},
                     "composable pair is the image of more than one square");
  }

  if (mode == ValidationMode::kFull) {
    for (int e = 0; e < p.num_edges(); ++e) {
      for (int f : p.in_edges(p.src(e))) {
        if (p.color(f) > p.color(e) && !p.forward(e, f))
          return failure(rep, "square_not_bijective", {name(e), name(f)},
                         "composable pair has no square");
        if (p.color(f) < p.color(e) && !p.backward(e, f))
          return failure(rep, "square_not_bijective", {name(e), name(f)},
                         "composable pair is not the image of any square");
      }
    }
  }

  for (int e = 0; e < p.num_edges(); ++e) {
    for (int f : p.in_edges(p.src(e))) {
      if (p.color(f) <= p.color(e)) continue;
      for (int g : p.in_edges(p.src(f))) {
        if (p.color(g) <= p.color(f)) continue;
        rep.hexagon_vacuous = false;
        // Chain A: swap (1,2), (2,3), (1,2).  Chain B: swap (2,3), (1,2), (2,3).
        auto a1 = p.forward(e, f);
        if (!a1) continue;
        auto a2 = p.forward(a1->second, g);
        if (!a2) continue;
        auto a3 = p.forward(a1->first, a2->first);
        if (!a3) continue;
        auto b1 = p.forward(f, g);
        if (!b1) continue;
        auto b2 = p.forward(e, b1->first);
        if (!b2) continue;
        auto b3 = p.forward(b2->second, b1->second);
        if (!b3) continue;
        ++rep.hexagons_checked;
        bool same = a3->first == b2->first && a3->second == b3->first && a2->second == b3->second;
        if (!same)
          return failure(rep, "hexagon_mismatch", {name(e), name(f), name(g)},
                         "the two ways of reversing this 3-colored path disagree: " +
                             name(a3->first) + "." + name(a3->second) + "." + name(a2->second) +
                             " vs " + name(b2->first) + "." + name(b3->first) + "." +
                             name(b3->second));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Morphisms

namespace {

Degree word_degree(const Presentation& p, const std::vector<int>& word) {
  Degree d(p.rank());
  for (int e : word) d[p.color(e) - 1] += 1;
  return d;
}

void check_composable(const Presentation& p, const std::vector<int>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (p.src(word[i]) != p.rng(word[i + 1]))
      fail(ErrorCode::kNotComposable,
           "s(" + p.edge_name(word[i]) + ") != r(" + p.edge_name(word[i + 1]) + ")");
  }
}

// Swap the adjacent pair at (t, t+1) to the other factorization.
void swap_at(const Presentation& p, std::vector<int>& w, std::size_t t) {
  int a = w[t];
  int b = w[t + 1];
  if (p.color(a) < p.color(b)) {
    auto r = p.forward(a, b);
    if (!r) fail(ErrorCode::kWindowTooSmall, "no square for " + p.edge_name(a) + "." + p.edge_name(b));
    w[t] = r->first;
    w[t + 1] = r->second;
  } else {
    auto r = p.backward(a, b);
    if (!r) fail(ErrorCode::kWindowTooSmall, "no square for " + p.edge_name(a) + "." + p.edge_name(b));
    w[t] = r->first;
    w[t + 1] = r->second;
  }
}

}  // namespace

Morphism vertex_morphism(const Presentation& p, int v) {
  return Morphism{v, v, {}, Degree(p.rank())};
}

Morphism edge_morphism(const Presentation& p, int e) {
  return Morphism{p.rng(e), p.src(e), {e}, Degree::unit(p.rank(), p.color(e))};
}

Morphism canonical_form(const Presentation& p, const std::vector<int>& word) {
  if (word.empty()) fail(ErrorCode::kMalformedInput, "empty edge word has no vertex");
  check_composable(p, word);
  std::vector<int> w = word;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (p.color(w[t]) > p.color(w[t + 1])) {
        swap_at(p, w, t);
        sorted = false;
      }
    }
  }
  Morphism m;
  m.range = p.rng(w.front());
  m.source = p.src(w.back());
  m.degree = word_degree(p, w);
  m.word = std::move(w);
  return m;
}

Morphism canonical_form(const Presentation& p, const std::vector<std::string>& word) {
  std::vector<int> ids;
  ids.reserve(word.size());
  for (const auto& s : word) ids.push_back(p.edge_index(s));
  return canonical_form(p, ids);
}

Morphism compose(const Presentation& p, const Morphism& mu, const Morphism& nu) {
  if (mu.source != nu.range)
    fail(ErrorCode::kNotComposable, "s(mu) = " + p.vertex_name(mu.source) + " but r(nu) = " +
                                        p.vertex_name(nu.range));
  if (mu.word.empty()) return nu;
  if (nu.word.empty()) return mu;
  std::vector<int> w = mu.word;
  w.insert(w.end(), nu.word.begin(), nu.word.end());
  return canonical_form(p, w);
}

std::vector<int> reorder(const Presentation& p, std::vector<int> w, const std::vector<int>& target) {
  if (target.size() != w.size()) fail(ErrorCode::kDegreeOutOfRange, "target length mismatch");
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::size_t q = pos;
    while (q < w.size() && p.color(w[q]) != target[pos]) ++q;
    if (q == w.size()) fail(ErrorCode::kDegreeOutOfRange, "target colors do not match the word");
    for (std::size_t t = q; t > pos; --t) swap_at(p, w, t - 1);
  }
  return w;
}

Morphism segment(const Presentation& p, const Morphism& lambda, const Degree& m, const Degree& n) {
  Degree zero(p.rank());
  if (m.rank() != p.rank() || n.rank() != p.rank() || !zero.le(m) || !m.le(n) ||
      !n.le(lambda.degree))
    fail(ErrorCode::kDegreeOutOfRange, "need 0 <= m <= n <= d(lambda)");
  std::vector<int> target;
  auto append = [&target](const Degree& d) {
    for (int c = 0; c < d.rank(); ++c)
      for (int t = 0; t < d[c]; ++t) target.push_back(c + 1);
  };
  append(m);
  append(n - m);
  append(lambda.degree - n);
  std::vector<int> w = reorder(p, lambda.word, target);
  std::size_t a = static_cast<std::size_t>(m.total());
  std::size_t b = static_cast<std::size_t>(n.total());
  if (a == b) {
    int v;
    if (w.empty()) v = lambda.range;
    else if (a < w.size()) v = p.rng(w[a]);
    else v = p.src(w.back());
    return vertex_morphism(p, v);
  }
  std::vector<int> part(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
  return canonical_form(p, part);
}

namespace {

void enumerate_from(const Presentation& p, int cur, std::size_t t, const std::vector<int>& colors,
                    std::vector<int>& word, int start, std::vector<Morphism>& out,
                    const Degree& deg) {
  if (t == colors.size()) {
    out.push_back(Morphism{start, cur, word, deg});
    return;
  }
  for (int e : p.in_edges(cur)) {
    if (p.color(e) != colors[t]) continue;
    word.push_back(e);
    enumerate_from(p, p.src(e), t + 1, colors, word, start, out, deg);
    word.pop_back();
  }
}

}  // namespace

std::vector<Morphism> morphisms_from(const Presentation& p, int u, const Degree& n) {
  if (n.rank() != p.rank() || !n.nonnegative()) fail(ErrorCode::kDegreeOutOfRange, "bad degree");
  std::vector<int> colors;
  for (int c = 0; c < n.rank(); ++c)
    for (int t = 0; t < n[c]; ++t) colors.push_back(c + 1);
  std::vector<Morphism> out;
  std::vector<int> word;
  enumerate_from(p, u, 0, colors, word, u, out, n);
  return out;
}

std::vector<Morphism> morphisms(const Presentation& p, int u, int v, const Degree& n) {
  std::vector<Morphism> all = morphisms_from(p, u, n);
  std::vector<Morphism> out;
  for (auto& m : all)
    if (m.source == v) out.push_back(std::move(m));
  return out;
}

std::vector<Morphism> morphisms_up_to(const Presentation& p, int u, const Degree& bound) {
  std::vector<Morphism> out;
  for (const Degree& n : degrees_up_to(bound)) {
    auto part = morphisms_from(p, u, n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Matrix> adjacency_matrices(const Presentation& p) {
  std::size_t n = static_cast<std::size_t>(p.num_vertices());
  std::vector<Matrix> out(static_cast<std::size_t>(p.rank()), Matrix(n, std::vector<long long>(n, 0)));
  for (int e = 0; e < p.num_edges(); ++e)
    out[static_cast<std::size_t>(p.color(e) - 1)][static_cast<std::size_t>(p.rng(e))]
       [static_cast<std::size_t>(p.src(e))] += 1;
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  std::size_t m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      long long x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += x * b[k][j];
    }
  return c;
}

const char* tri_state_name(TriState t) {
  switch (t) {
    case TriState::kYes: return "Yes";
    case TriState::kNo: return "No";
    case TriState::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string morphism_label(const Presentation& p, const Morphism& m) {
  if (m.word.empty()) return p.vertex_name(m.range);
  std::string s;
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    if (i) s += '.';
    s += p.edge_name(m.word[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

// A directed cycle as an edge word e1..em with s(e_i) = r(e_{i+1}).
std::optional<std::vector<int>> find_cycle(const Presentation& p) {
  int n = p.num_vertices();
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != 0) continue;
    // Iterative DFS along r(e) -> s(e).
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      const auto& in = p.in_edges(v);
      if (idx == in.size()) {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      int e = in[idx++];
      int w = p.src(e);
      if (state[static_cast<std::size_t>(w)] == 1) {
        std::vector<int> cyc{e};
        int x = v;
        while (x != w) {
          int pe = via[static_cast<std::size_t>(x)];
          cyc.push_back(pe);
          x = p.rng(pe);
        }
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        state[static_cast<std::size_t>(w)] = 1;
        via[static_cast<std::size_t>(w)] = e;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

// Number of color-sorted paths from range u, saturating at 2, per source.
class PathCounter {
 public:
  explicit PathCounter(const Presentation& p) : p_(p) {}

  const std::vector<int>& count(int x, int min_color) {
    std::size_t key = static_cast<std::size_t>(x) * static_cast<std::size_t>(p_.rank() + 1) +
                      static_cast<std::size_t>(min_color);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> c(static_cast<std::size_t>(p_.num_vertices()), 0);
    c[static_cast<std::size_t>(x)] = 1;
    for (int e : p_.in_edges(x)) {
      if (p_.color(e) < min_color) continue;
      const auto& sub = count(p_.src(e), p_.color(e));
      for (std::size_t v = 0; v < c.size(); ++v) c[v] = std::min(2, c[v] + sub[v]);
    }
    return memo_.emplace(key, std::move(c)).first->second;
  }

 private:
  const Presentation& p_;
  std::unordered_map<std::size_t, std::vector<int>> memo_;
};

void two_paths(const Presentation& p, int cur, int target, int min_color, std::vector<int>& word,
               std::vector<std::vector<int>>& found) {
  if (found.size() >= 2) return;
  if (cur == target) found.push_back(word);
  for (int e : p.in_edges(cur)) {
    if (found.size() >= 2) return;
    if (p.color(e) < min_color) continue;
    word.push_back(e);
    two_paths(p, p.src(e), target, p.color(e), word, found);
    word.pop_back();
  }
}

Morphism from_word(const Presentation& p, int start, const std::vector<int>& w) {
  if (w.empty()) return vertex_morphism(p, start);
  return canonical_form(p, w);
}

}  // namespace

ConnectivityReport connectivity_report(const Presentation& p) {
  ConnectivityReport rep;
  int n = p.num_vertices();

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e = 0; e < p.num_edges(); ++e) {
    int a = find(p.src(e)), b = find(p.rng(e));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<std::string>> comps;
  for (int v = 0; v < n; ++v) comps[find(v)].push_back(p.vertex_name(v));
  for (auto& [root, names] : comps) rep.components.push_back(std::move(names));

  if (n > 0) {
    auto reach = [&](bool forward_dir) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::deque<int> q{0};
      seen[0] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        const auto& list = forward_dir ? p.in_edges(v) : p.out_edges(v);
        for (int e : list) {
          int w = forward_dir ? p.src(e) : p.rng(e);
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            q.push_back(w);
          }
        }
      }
      return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    rep.strongly_connected = reach(true) && reach(false);
  }

  // Singly connected: parallel edges, then cycles, then exhaustive counting.
  std::map<std::pair<int, int>, int> first_edge;
  for (int e = 0; e < p.num_edges() && !rep.witness; ++e) {
    auto [it, inserted] = first_edge.emplace(std::make_pair(p.rng(e), p.src(e)), e);
    if (!inserted) rep.witness = std::make_pair(edge_morphism(p, it->second), edge_morphism(p, e));
  }
  auto cycle = find_cycle(p);
  rep.has_cycle = cycle.has_value();
  if (!rep.witness && cycle) {
    Morphism c = canonical_form(p, *cycle);
    rep.witness = std::make_pair(vertex_morphism(p, c.range), c);
  }
  if (!rep.witness) {
    PathCounter counter(p);
    for (int u = 0; u < n && !rep.witness; ++u) {
      const auto& c = counter.count(u, 1);
      for (int v = 0; v < n; ++v) {
        if (c[static_cast<std::size_t>(v)] < 2) continue;
        std::vector<int> word;
        std::vector<std::vector<int>> found;
        two_paths(p, u, v, 1, word, found);
        rep.witness = std::make_pair(from_word(p, u, found.at(0)), from_word(p, u, found.at(1)));
        break;
      }
    }
  }
  rep.singly_connected = rep.witness ? TriState::kNo : TriState::kYes;

  // Rigidity: for e of color i and f of color j != i, exactly one e', f'
  // with e'f = f'e and exactly one e'', f'' with ef'' = fe''.
  std::map<std::pair<int, int>, int> count_a, count_b;
  for (const auto& s : p.square_indices()) {
    ++count_a[{s.j_edge, s.i_prime}];
    ++count_b[{s.i_edge, s.j_prime}];
  }
  rep.rigid = true;
  for (int e = 0; e < p.num_edges() && rep.rigid; ++e) {
    for (int f = 0; f < p.num_edges(); ++f) {
      if (p.color(e) >= p.color(f)) continue;
      if (p.src(e) == p.src(f)) {
        auto it = count_a.find({f, e});
        if (it == count_a.end() || it->second != 1) {
          rep.rigid = false;
          break;
        }
      }
      if (p.rng(e) == p.rng(f)) {
        auto it = count_b.find({e, f});
        if (it == count_b.end() || it->second != 1) {
          rep.rigid = false;
          break;
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lazy interface

bool FiniteKGraph::has_vertex(const std::string& v) const { return p_.find_vertex(v).has_value(); }

std::vector<Edge> FiniteKGraph::edges_into(const std::string& v) const {
  std::vector<Edge> out;
  for (int e : p_.in_edges(p_.vertex_index(v))) out.push_back(p_.edges()[static_cast<std::size_t>(e)]);
  return out;
}

std::vector<Edge> FiniteKGraph::edges_out_of(const std::string& v) const {
  std::vector<Edge> out;
  for (int e : p_.out_edges(p_.vertex_index(v))) out.push_back(p_.edges()[static_cast<std::size_t>(e)]);
  return out;
}

std::pair<Edge, Edge> FiniteKGraph::factor(const Edge& e, const Edge& f) const {
  auto r = p_.forward(p_.edge_index(e.id), p_.edge_index(f.id));
  if (!r) fail(ErrorCode::kWindowTooSmall, "no square for " + e.id + "." + f.id);
  return {p_.edges()[static_cast<std::size_t>(r->first)], p_.edges()[static_cast<std::size_t>(r->second)]};
}

namespace {

std::vector<std::string> ball(const LazyKGraph& g, const std::vector<std::string>& seeds, int radius) {
  std::vector<std::string> order;
  std::unordered_map<std::string, int> dist;
  std::deque<std::string> q;
  for (const auto& s : seeds) {
    if (!g.has_vertex(s)) fail(ErrorCode::kUnknownVertex, "seed '" + s + "' is not a vertex");
    if (dist.emplace(s, 0).second) {
      order.push_back(s);
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    std::string v = q.front();
    q.pop_front();
    int d = dist[v];
    if (d >= radius) continue;
    auto visit = [&](const std::string& w) {
      if (dist.emplace(w, d + 1).second) {
        order.push_back(w);
        q.push_back(w);
      }
    };
    for (const Edge& e : g.edges_into(v)) visit(e.src);
    for (const Edge& e : g.edges_out_of(v)) visit(e.rng);
  }
  return order;
}

Presentation induced(const LazyKGraph& g, const std::vector<std::string>& order) {
  std::unordered_set<std::string> present(order.begin(), order.end());
  std::map<std::string, Edge> edges;
  for (const auto& v : order)
    for (const Edge& e : g.edges_into(v))
      if (present.count(e.src)) edges.emplace(e.id, e);

  std::vector<Square> squares;
  for (const auto& [id, e] : edges) {
    for (const Edge& f : g.edges_into(e.src)) {
      if (f.color <= e.color || edges.count(f.id) == 0) continue;
      auto [fp, ep] = g.factor(e, f);
      if (edges.count(fp.id) && edges.count(ep.id)) squares.push_back(Square{e.id, f.id, fp.id, ep.id});
    }
  }
  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (auto& [id, e] : edges) edge_list.push_back(e);
  return Presentation(g.rank(), order, std::move(edge_list), std::move(squares));
}

}  // namespace

Presentation window(const LazyKGraph& g, const std::vector<std::string>& seeds, int radius) {
  return induced(g, ball(g, seeds, radius));
}

Presentation square_closed_window(const LazyKGraph& g, const std::vector<std::string>& seeds, int radius,
                                  std::size_t max_vertices) {
  std::vector<std::string> order = ball(g, seeds, radius);
  std::unordered_set<std::string> present(order.begin(), order.end());
  bool grew = true;
  auto add = [&](const std::string& v) {
    if (!present.insert(v).second) return;
    if (present.size() > max_vertices)
      fail(ErrorCode::kWindowTooSmall, "square closure exceeded " + std::to_string(max_vertices) + " vertices");
    order.push_back(v);
    grew = true;
  };
  // Every composable two-colour pair inside the window gets its square's
  // middle vertex; repeat until a full pass adds nothing.
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::string x = order[i];
      for (const Edge& e : g.edges_into(x)) {
        if (!present.count(e.src)) continue;
        for (const Edge& f : g.edges_into(e.src)) {
          if (f.color == e.color || !present.count(f.src)) continue;
          if (e.color < f.color) {
            add(g.factor(e, f).first.src);
            continue;
          }
          for (const Edge& a : g.edges_into(x)) {
            if (a.color != f.color) continue;
            for (const Edge& b : g.edges_into(a.src)) {
              if (b.color != e.color || b.src != f.src) continue;
              auto [fp, ep] = g.factor(a, b);
              if (fp.id == e.id && ep.id == f.id) add(a.src);
            }
          }
        }
      }
    }
  }
  return induced(g, order);
}

}  // namespace hrg
