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

// Reference checks for the triangle-group word calculus. Moves are built
// from the triple set alone.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hrg/a2.hpp"

namespace oracle {

using hrg::SignedWord;
using hrg::Triella;

inline SignedWord inverse_word(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

/// Elementary moves u -> v with u v^-1 a relator a_x a_y a_z, its inverse,
/// or a free pair a a^-1, split at every position. Closed under reversal.
inline std::vector<std::pair<SignedWord, SignedWord>> elementary_moves(const Triella& t) {
  std::vector<SignedWord> relators;
  for (const auto& [x, y, z] : t.triples()) {
    SignedWord r{x + 1, y + 1, z + 1};
    relators.push_back(r);
    relators.push_back(inverse_word(r));
  }
  for (int x = 0; x < t.points(); ++x) {
    relators.push_back({x + 1, -(x + 1)});
    relators.push_back({-(x + 1), x + 1});
  }
  std::set<std::pair<SignedWord, SignedWord>> moves;
  for (const auto& r : relators)
    for (std::size_t k = 0; k <= r.size(); ++k) {
      SignedWord u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
      SignedWord v = inverse_word(SignedWord(r.begin() + static_cast<std::ptrdiff_t>(k), r.end()));
      moves.insert({u, v});
    }
  return {moves.begin(), moves.end()};
}

/// Words satisfying the right normal form conditions, by length.
inline std::vector<SignedWord> right_normal_words(const Triella& t, int max_len) {
  std::vector<SignedWord> out{{}};
  std::vector<SignedWord> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<SignedWord> next;
    for (const auto& w : layer)
      for (int x = 0; x < t.points(); ++x)
        for (int sign : {1, -1}) {
          int g = sign * (x + 1);
          if (!w.empty()) {
            int h = w.back();
            int px = std::abs(h) - 1;
            if (h < 0 && g > 0) continue;                          // negatives come last
            if (h > 0 && g > 0 && t.in_lambda(px, x)) continue;    // (a)
            if (h < 0 && g < 0 && t.in_lambda(x, px)) continue;    // (b)
            if (h > 0 && g < 0 && px == x) continue;               // (c)
          }
          auto v = w;
          v.push_back(g);
          next.push_back(std::move(v));
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Every word over the alphabet with length <= max_len, shortest first.
inline std::vector<SignedWord> all_words(const Triella& t, int max_len) {
  std::vector<SignedWord> out{{}};
  std::vector<SignedWord> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<SignedWord> next;
    for (const auto& w : layer)
      for (int x = 0; x < t.points(); ++x)
        for (int sign : {1, -1}) {
          auto v = w;
          v.push_back(sign * (x + 1));
          next.push_back(std::move(v));
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

struct ConfluenceResult {
  std::size_t words = 0;          // words of length <= max_len
  std::size_t fibers = 0;         // distinct normal forms among them
  std::size_t context_checks = 0; // (state, move) pairs
  std::size_t chain_moves = 0;    // moves used to reach normal forms
  std::size_t violations = 0;
  std::string first_violation;
  bool ok() const { return violations == 0; }
};

/// Every elementary move between words of length <= bound preserves the
/// normal form, and every word of length <= max_len reaches its normal form
/// by elementary moves without exceeding `bound`. Together: the move
/// closure of each short word is exactly its normalize fiber.
///
/// The first half uses that the normalizer is a left fold over letters, so
/// NF(x u y) depends on x only through NF(x); comparing NF(S u) with NF(S v)
/// for every normal form S short enough covers every context.
inline ConfluenceResult confluence_check(const Triella& t, int max_len, int bound) {
  ConfluenceResult res;
  auto violate = [&](const std::string& what) {
    if (res.violations++ == 0) res.first_violation = what;
  };
  const auto moves = elementary_moves(t);
  std::set<std::pair<SignedWord, SignedWord>> move_set(moves.begin(), moves.end());

  for (const auto& s : right_normal_words(t, bound - 1)) {
    if (hrg::normalize(t, s) != s) violate("normal form not fixed: " + hrg::format_signed_word(s));
    for (const auto& [u, v] : moves) {
      if (static_cast<int>(s.size() + std::max(u.size(), v.size())) > bound) continue;
      ++res.context_checks;
      SignedWord su = s, sv = s;
      su.insert(su.end(), u.begin(), u.end());
      sv.insert(sv.end(), v.begin(), v.end());
      if (hrg::normalize(t, su) != hrg::normalize(t, sv))
        violate("move changes normal form: " + hrg::format_signed_word(su) + " vs " + hrg::format_signed_word(sv));
    }
  }

  auto apply = [&](SignedWord& w, std::size_t pos, const SignedWord& u, const SignedWord& v) {
    if (!move_set.count({u, v})) {
      violate("not an elementary move");
      return;
    }
    if (!std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
      violate("move does not match word");
      return;
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + u.size()));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), v.begin(), v.end());
    ++res.chain_moves;
    if (static_cast<int>(w.size()) > bound) violate("chain exceeds length bound");
  };

  std::set<SignedWord> fibers;
  for (const auto& w0 : all_words(t, max_len)) {
    ++res.words;
    SignedWord w = w0;
    hrg::normalize_traced(t, w0, hrg::NormalSide::kRight, [&](const hrg::RewriteStep& step) {
      SignedWord pair(step.before.begin() + static_cast<std::ptrdiff_t>(step.pos),
                      step.before.begin() + static_cast<std::ptrdiff_t>(step.pos + 2));
      if (w != step.before) violate("trace out of sync");
      if (step.rule == "swap") {
        // a_x^-1 a_y -> a_s a_z a_y -> a_s a_t^-1, with (x, s, z) in T.
        int x = -pair[0] - 1;
        int s = step.after[step.pos] - 1;
        int z = t.third(x, s);
        if (z < 0) {
          violate("swap without a triple");
          return;
        }
        apply(w, step.pos, {pair[0]}, {s + 1, z + 1});
        apply(w, step.pos + 1, {z + 1, pair[1]}, {step.after[step.pos + 1]});
      } else {
        SignedWord rep(step.after.begin() + static_cast<std::ptrdiff_t>(step.pos),
                       step.after.begin() + static_cast<std::ptrdiff_t>(step.pos + 2 - (step.before.size() - step.after.size())));
        apply(w, step.pos, pair, rep);
      }
    });
    SignedWord nf = hrg::normalize(t, w0);
    if (w != nf) violate("chain does not end at the normal form of " + hrg::format_signed_word(w0));
    fibers.insert(nf);
  }
  res.fibers = fibers.size();
  return res;
}

/// Literal closure: union-find over all words of length <= bound joined by
/// elementary moves; returns the number of components meeting words of
/// length <= max_len and the number of those components that are not
/// contained in one normalize fiber, plus fibers split across components.
struct ClosureResult {
  std::size_t components = 0;
  std::size_t fibers = 0;
  std::size_t mixed_components = 0;
  std::size_t split_fibers = 0;
};

inline ClosureResult brute_force_closure(const Triella& t, int max_len, int bound) {
  const auto words = all_words(t, bound);
  std::map<SignedWord, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto moves = elementary_moves(t);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    for (const auto& [u, v] : moves) {
      if (w.size() - u.size() + v.size() > static_cast<std::size_t>(bound) || u.size() > w.size()) continue;
      for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
        if (!std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        SignedWord x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        x.insert(x.end(), v.begin(), v.end());
        x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(p + u.size()), w.end());
        parent[find(i)] = find(index.at(x));
      }
    }
  }
  std::map<std::size_t, std::set<SignedWord>> nf_of_component;
  std::map<SignedWord, std::set<std::size_t>> components_of_nf;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto nf = hrg::normalize(t, words[i]);
    std::size_t root = find(i);
    nf_of_component[root].insert(nf);
    if (static_cast<int>(words[i].size()) <= max_len) components_of_nf[nf].insert(root);
  }
  ClosureResult res;
  std::set<std::size_t> short_components;
  for (const auto& [nf, comps] : components_of_nf) {
    if (comps.size() > 1) ++res.split_fibers;
    short_components.insert(comps.begin(), comps.end());
  }
  res.fibers = components_of_nf.size();
  res.components = short_components.size();
  for (std::size_t c : short_components)
    if (nf_of_component[c].size() > 1) ++res.mixed_components;
  return res;
}

/// Uniform over elements of a uniformly chosen shape <= bound.
class RandomElements {
 public:
  RandomElements(const hrg::A2Ops& ops, hrg::Degree bound, unsigned seed)
      : ops_(ops), bound_(std::move(bound)), rng_(seed) {}
  hrg::A2Element operator()() {
    std::uniform_int_distribution<int> m(0, bound_[0]), n(0, bound_[1]);
    return pick({m(rng_), n(rng_)});
  }
  hrg::A2Element pick(const hrg::Degree& shape) {
    auto key = shape.str();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, ops_.elements_of_shape(shape)).first;
    std::uniform_int_distribution<std::size_t> i(0, it->second.size() - 1);
    return it->second[i(rng_)];
  }
  std::mt19937& rng() { return rng_; }

 private:
  const hrg::A2Ops& ops_;
  hrg::Degree bound_;
  std::mt19937 rng_;
  std::map<std::string, std::vector<hrg::A2Element>> cache_;
};

}  // namespace oracle
