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

// Slow, independent reference computations used to check the library.
// Nothing here calls the code under test beyond Presentation accessors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hrg/constructions.hpp"
#include "hrg/kgraph.hpp"

namespace oracle {

using hrg::Degree;
using hrg::Presentation;

/// Composable edge words with nondecreasing colours and degree n, range u.
/// Each morphism has exactly one such word.
inline std::vector<std::vector<int>> sorted_words(const Presentation& p, int u, const Degree& n) {
  std::vector<int> colors;
  for (int c = 1; c <= p.rank(); ++c)
    for (int t = 0; t < n[c - 1]; ++t) colors.push_back(c);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int at, std::size_t i) -> void {
    if (i == colors.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < p.num_edges(); ++e)
      if (p.rng(e) == at && p.color(e) == colors[i]) {
        cur.push_back(e);
        self(self, p.src(e), i + 1);
        cur.pop_back();
      }
  };
  rec(rec, u, 0);
  return out;
}

inline int word_source(const Presentation& p, int u, const std::vector<int>& w) {
  return w.empty() ? u : p.src(w.back());
}

/// Integer determinant by cofactor expansion; matrices here are tiny.
inline long long det(const std::vector<std::vector<long long>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    long long term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

/// Invariant factors from determinantal divisors: D_i = gcd of i x i minors,
/// d_i = D_i / D_{i-1}. Returns (free rank, torsion > 1) of Z^cols / rowspace.
inline std::pair<int, std::vector<long long>> abelian_invariants(const std::vector<std::vector<long long>>& a,
                                                                  std::size_t cols) {
  std::size_t rows = a.size();
  std::vector<long long> D{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    auto choose = [](std::size_t n, std::size_t k2, auto&& f) {
      std::vector<std::size_t> idx(k2);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        f(idx);
        std::size_t i = k2;
        while (i > 0 && idx[i - 1] == n - k2 + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k2; ++j) idx[j] = idx[j - 1] + 1;
      }
    };
    choose(rows, k, [&](const std::vector<std::size_t>& ri) {
      choose(cols, k, [&](const std::vector<std::size_t>& ci) {
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) m[x][y] = a[ri[x]][ci[y]];
        g = std::gcd(g, std::llabs(det(m)));
      });
    });
    if (g == 0) break;
    D.push_back(g);
  }
  std::vector<long long> torsion;
  for (std::size_t i = 1; i < D.size(); ++i) {
    long long d = D[i] / D[i - 1];
    if (d > 1) torsion.push_back(d);
  }
  int rank = static_cast<int>(cols) - static_cast<int>(D.size() - 1);
  return {rank, torsion};
}

/// A random one-vertex 2-graph: theta is a uniformly random bijection.
inline Presentation random_monoidal(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 3);
  int n1 = size(rng), n2 = size(rng);
  std::vector<std::pair<int, int>> targets;
  for (int j = 1; j <= n2; ++j)
    for (int i = 1; i <= n1; ++i) targets.emplace_back(j, i);
  std::shuffle(targets.begin(), targets.end(), rng);
  return hrg::monoidal_2graph(n1, n2, targets);
}

/// A random 1-graph on 1..max_vertices vertices with 0..max_edges edges.
inline Presentation random_1graph(std::mt19937& rng, int max_vertices = 5, int max_edges = 7) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> ne(0, max_edges), pick(0, n - 1);
  int m = ne(rng);
  std::vector<hrg::Edge> es;
  for (int i = 0; i < m; ++i) es.push_back(hrg::Edge{"e" + std::to_string(i), 1, vs[pick(rng)], vs[pick(rng)]});
  return Presentation(1, vs, es, {});
}

// A random canonical word by a random walk; nullopt when the walk gets stuck.
inline std::optional<std::vector<int>> random_sorted_word(const Presentation& p, int u, const Degree& n, std::mt19937& rng) {
  std::vector<int> word;
  int at = u;
  for (int c = 1; c <= p.rank(); ++c)
    for (int t = 0; t < n[c - 1]; ++t) {
      std::vector<int> options;
      for (int e : p.in_edges(at))
        if (p.color(e) == c) options.push_back(e);
      if (options.empty()) return std::nullopt;
      int e = options[rng() % options.size()];
      word.push_back(e);
      at = p.src(e);
    }
  return word;
}

inline Degree random_degree(int k, int max, std::mt19937& rng) {
  Degree d(k);
  for (int i = 0; i < k; ++i) d[i] = static_cast<int>(rng() % static_cast<unsigned>(max + 1));
  return d;
}

// m <= n <= bound chosen uniformly per coordinate.
inline std::pair<Degree, Degree> random_interval(const Degree& bound, std::mt19937& rng) {
  Degree m(bound.rank()), n(bound.rank());
  for (int i = 0; i < bound.rank(); ++i) {
    int a = static_cast<int>(rng() % static_cast<unsigned>(bound[i] + 1));
    int b = static_cast<int>(rng() % static_cast<unsigned>(bound[i] + 1));
    m[i] = std::min(a, b);
    n[i] = std::max(a, b);
  }
  return {m, n};
}

/// f(s(e)) = f(r(e)) + d(e), propagated depth first from `root` over the
/// undirected skeleton with f(root) = 0. nullopt when some edge disagrees or
/// a vertex is unreachable.
inline std::optional<std::vector<Degree>> propagate_grading(const Presentation& p, int root) {
  const int n = p.num_vertices();
  std::vector<std::vector<int>> touching(static_cast<std::size_t>(n));
  for (int e = 0; e < p.num_edges(); ++e) {
    touching[static_cast<std::size_t>(p.src(e))].push_back(e);
    touching[static_cast<std::size_t>(p.rng(e))].push_back(e);
  }
  std::vector<std::optional<Degree>> f(static_cast<std::size_t>(n));
  f[static_cast<std::size_t>(root)] = Degree(p.rank());
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : touching[static_cast<std::size_t>(v)]) {
      auto unit = Degree::unit(p.rank(), p.color(e));
      auto& fs = f[static_cast<std::size_t>(p.src(e))];
      auto& fr = f[static_cast<std::size_t>(p.rng(e))];
      if (!fs) {
        fs = *fr + unit;
        stack.push_back(p.src(e));
      } else if (!fr) {
        fr = *fs - unit;
        stack.push_back(p.rng(e));
      }
    }
  }
  std::vector<Degree> out;
  for (const auto& v : f) {
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  for (int e = 0; e < p.num_edges(); ++e)
    if (out[static_cast<std::size_t>(p.src(e))] !=
        out[static_cast<std::size_t>(p.rng(e))] + Degree::unit(p.rank(), p.color(e)))
      return std::nullopt;
  return out;
}

}  // namespace oracle
