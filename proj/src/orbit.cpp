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

#include "hrg/orbit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hrg/constructions.hpp"

namespace hrg {

std::string PathStream::vertex(int n) const {
  if (n == 0) return start;
  if (length && n > *length) fail(ErrorCode::kDegreeOutOfRange, "stream '" + name + "' has only " + std::to_string(*length) + " blocks");
  return block(n - 1).back().src;
}

std::vector<Edge> PathStream::truncation(int n) const {
  if (length && n > *length) fail(ErrorCode::kDegreeOutOfRange, "stream '" + name + "' has only " + std::to_string(*length) + " blocks");
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) {
    auto b = block(i);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

PathStream finite_stream(std::string name, std::string start, std::vector<std::vector<Edge>> blocks) {
  PathStream s;
  s.name = std::move(name);
  s.start = std::move(start);
  s.length = static_cast<int>(blocks.size());
  s.block = [blocks = std::move(blocks)](int n) { return blocks.at(static_cast<std::size_t>(n)); };
  return s;
}

void check_stream(const LazyKGraph& g, const PathStream& x, int n) {
  std::string at = x.start;
  if (!g.has_vertex(at)) fail(ErrorCode::kMalformedInput, "stream '" + x.name + "' starts outside the graph");
  for (int i = 0; i < x.available(n); ++i) {
    auto b = x.block(i);
    if (static_cast<int>(b.size()) != g.rank())
      fail(ErrorCode::kMalformedInput, "stream '" + x.name + "' block " + std::to_string(i) + " has the wrong size");
    for (std::size_t c = 0; c < b.size(); ++c) {
      const Edge& e = b[c];
      if (e.color != static_cast<int>(c) + 1 || e.rng != at)
        fail(ErrorCode::kMalformedInput, "stream '" + x.name + "' block " + std::to_string(i) + " is not composable");
      auto into = g.edges_into(at);
      if (std::find(into.begin(), into.end(), e) == into.end())
        fail(ErrorCode::kMalformedInput, "stream '" + x.name + "' uses unknown edge '" + e.id + "'");
      at = e.src;
    }
  }
}

namespace {

std::string num(char c, long n) { return std::string(1, c) + std::to_string(n); }
std::string num2(char c, long n, long i) { return num(c, n) + "_" + std::to_string(i); }

PathStream unbounded(std::string name, std::string start, std::function<std::vector<Edge>(int)> block) {
  PathStream s;
  s.name = std::move(name);
  s.start = std::move(start);
  s.block = std::move(block);
  return s;
}

std::optional<long> parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Edge edge_into(const LazyKGraph& g, const std::string& v, const std::string& id) {
  for (const Edge& e : g.edges_into(v))
    if (e.id == id) return e;
  fail(ErrorCode::kMalformedInput, "no edge '" + id + "' with range '" + v + "'");
}

PathStream nonhausdorff_stream(const std::string& spec) {
  if (spec == "e-ray")
    return unbounded(spec, "u0", [](int n) { return std::vector<Edge>{{num('e', n), 1, num('u', n + 1), num('u', n)}}; });
  if (spec == "f-ray")
    return unbounded(spec, "v0", [](int n) { return std::vector<Edge>{{num('f', n), 1, num('v', n + 1), num('v', n)}}; });
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(ErrorCode::kMalformedInput, "unknown stream '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  auto m = parse_long(spec.substr(colon + 1));
  if (!m || (kind != "z" && kind != "zx" && kind != "zy")) fail(ErrorCode::kMalformedInput, "unknown stream '" + spec + "'");
  long n = *m;
  auto tail = [n](int i) { return std::vector<Edge>{{num2('k', n, i), 1, num2('w', n, i + 1), num2('w', n, i)}}; };
  if (kind == "z") return unbounded(spec, num2('w', n, 0), tail);
  if (n < 0) fail(ErrorCode::kMalformedInput, "stream '" + spec + "' needs n >= 0");
  // e_0 ... e_{n-1} g_n z_n, or the f/h version.
  char line = kind == "zx" ? 'u' : 'v';
  char step = kind == "zx" ? 'e' : 'f';
  char join = kind == "zx" ? 'g' : 'h';
  return unbounded(spec, num(line, 0), [=](int i) {
    if (i < n) return std::vector<Edge>{{num(step, i), 1, num(line, i + 1), num(line, i)}};
    if (i == n) return std::vector<Edge>{{num(join, n), 1, num2('w', n, 0), num(line, n)}};
    return tail(i - static_cast<int>(n) - 1);
  });
}

PathStream tree_stream(const std::string& spec) {
  char bit = spec == "p1" ? '0' : '1';
  return unbounded(spec, "t", [bit](int n) {
    std::string here(static_cast<std::size_t>(n), bit);
    std::string child = here + bit;
    return std::vector<Edge>{{"x" + child, 1, "t" + child, "t" + here}};
  });
}

// "path:<start>/<block>,...[;<block>,...]"
PathStream explicit_stream(const LazyKGraph& g, const std::string& spec) {
  std::string body = spec.substr(5);
  auto slash = body.find('/');
  if (slash == std::string::npos) fail(ErrorCode::kMalformedInput, "path stream '" + spec + "' needs <start>/");
  std::string start = body.substr(0, slash);
  if (!g.has_vertex(start)) fail(ErrorCode::kMalformedInput, "path stream '" + spec + "' starts at an unknown vertex");
  auto parts = split(body.substr(slash + 1), ';');
  if (parts.empty() || parts.size() > 2) fail(ErrorCode::kMalformedInput, "bad path stream '" + spec + "'");
  std::string at = start;
  auto read_blocks = [&](const std::string& text) {
    std::vector<std::vector<Edge>> out;
    if (text.empty()) return out;
    for (const auto& block : split(text, ',')) {
      std::vector<Edge> edges;
      for (const auto& id : split(block, '.')) {
        edges.push_back(edge_into(g, at, id));
        at = edges.back().src;
      }
      out.push_back(std::move(edges));
    }
    return out;
  };
  auto prefix = read_blocks(parts[0]);
  std::string cycle_start = at;
  auto cycle = parts.size() == 2 ? read_blocks(parts[1]) : std::vector<std::vector<Edge>>{};
  if (!cycle.empty() && at != cycle_start)
    fail(ErrorCode::kMalformedInput, "repeating part of '" + spec + "' does not return to its start");
  PathStream s;
  s.name = spec;
  s.start = start;
  if (cycle.empty()) s.length = static_cast<int>(prefix.size());
  s.block = [prefix, cycle](int n) {
    auto i = static_cast<std::size_t>(n);
    if (i < prefix.size()) return prefix[i];
    return cycle.at((i - prefix.size()) % cycle.size());
  };
  return s;
}

}  // namespace

PathStream parse_stream(const LazyKGraph& g, const std::string& graph_name, const std::string& spec) {
  PathStream s;
  if (spec.rfind("path:", 0) == 0) {
    s = explicit_stream(g, spec);
  } else if (graph_name == "lambda-E-4.5") {
    s = nonhausdorff_stream(spec);
  } else if (graph_name == "tree-fixture" && (spec == "p1" || spec == "p2")) {
    s = tree_stream(spec);
    s.length = kTreeDepth;
  } else {
    fail(ErrorCode::kMalformedInput, "unknown stream '" + spec + "' for graph '" + graph_name + "'");
  }
  check_stream(g, s, std::min(s.available(8), 8));
  return s;
}

// ---------------------------------------------------------------------------

UpperBoundResult common_upper_bound(const LazyKGraph& g, const std::string& u, const std::string& v, int radius) {
  for (const auto& x : {u, v})
    if (!g.has_vertex(x)) fail(ErrorCode::kWindowExhausted, "vertex '" + x + "' is outside the graph");
  UpperBoundResult res;
  std::unordered_set<std::string> seen_u{u}, seen_v{v};
  std::vector<std::string> front_u{u}, front_v{v};
  std::set<std::string> common;
  if (u == v) common.insert(u);
  auto expand = [&g](std::vector<std::string>& front, std::unordered_set<std::string>& seen) {
    std::vector<std::string> next;
    for (const auto& x : front)
      for (const Edge& e : g.edges_into(x))
        if (seen.insert(e.src).second) next.push_back(e.src);
    front = std::move(next);
  };
  for (int d = 0; d < radius && common.empty() && !(front_u.empty() && front_v.empty()); ++d) {
    expand(front_u, seen_u);
    expand(front_v, seen_v);
    for (const auto& x : front_u)
      if (seen_v.count(x)) common.insert(x);
    for (const auto& x : front_v)
      if (seen_u.count(x)) common.insert(x);
  }
  if (!common.empty()) res.vertex = *common.begin();
  res.exhausted = front_u.empty() && front_v.empty();
  res.reach_u.assign(seen_u.begin(), seen_u.end());
  res.reach_v.assign(seen_v.begin(), seen_v.end());
  std::sort(res.reach_u.begin(), res.reach_u.end());
  std::sort(res.reach_v.begin(), res.reach_v.end());
  return res;
}

SeparationVerdict separation_test(const LazyKGraph& g, const PathStream& x, const PathStream& y, int n_max,
                                  int radius) {
  if (n_max < 0) fail(ErrorCode::kDegreeOutOfRange, "N_max must be nonnegative");
  int lx = x.available(n_max), ly = y.available(n_max);
  std::vector<std::vector<Edge>> bx, by;
  for (int i = 0; i < lx; ++i) bx.push_back(x.block(i));
  for (int i = 0; i < ly; ++i) by.push_back(y.block(i));
  auto vx = [&](int n) { return n == 0 ? x.start : bx[static_cast<std::size_t>(n - 1)].back().src; };
  auto vy = [&](int n) { return n == 0 ? y.start : by[static_cast<std::size_t>(n - 1)].back().src; };
  for (int p = 0; p <= lx; ++p)
    for (int q = 0; q <= ly; ++q) {
      int overlap = std::min(lx - p, ly - q);
      if (overlap < 1 || vx(p) != vy(q)) continue;
      bool same = true;
      for (int i = 0; i < overlap && same; ++i)
        same = bx[static_cast<std::size_t>(p + i)] == by[static_cast<std::size_t>(q + i)];
      if (same)
        fail(ErrorCode::kShiftEquivalentDetected, "shift " + std::to_string(p) + " of '" + x.name + "' matches shift " +
                                                      std::to_string(q) + " of '" + y.name + "'");
    }
  SeparationVerdict out;
  out.n_max = n_max;
  for (int n = 0; n <= std::min(lx, ly); ++n) {
    auto cub = common_upper_bound(g, vx(n), vy(n), radius);
    if (!cub.vertex && cub.exhausted) {
      out.separated = true;
      out.n = n;
      out.reach_x = std::move(cub.reach_u);
      out.reach_y = std::move(cub.reach_v);
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back(cub.vertex.value_or(""));
  }
  out.n = std::min(lx, ly);
  return out;
}

bool verify_separation(const LazyKGraph& g, const PathStream& x, const PathStream& y, const SeparationVerdict& v) {
  if (!v.separated) return false;
  std::unordered_set<std::string> a(v.reach_x.begin(), v.reach_x.end()), b(v.reach_y.begin(), v.reach_y.end());
  if (!a.count(x.vertex(v.n)) || !b.count(y.vertex(v.n))) return false;
  for (const auto& s : a)
    if (b.count(s)) return false;
  for (const auto* set : {&a, &b})
    for (const auto& s : *set) {
      if (!g.has_vertex(s)) return false;
      for (const Edge& e : g.edges_into(s))
        if (!set->count(e.src)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

LowerSet path_lower_set(const LazyKGraph& g, const PathStream& x, int radius) {
  int n_top = x.available(radius);
  // level[v] = least n with v <= x(n1); depth[v] = steps below that x(n1).
  std::map<std::string, std::pair<int, int>> info;
  auto down = [&g, radius](const std::string& from) {
    std::map<std::string, int> depth{{from, 0}};
    std::vector<std::string> front{from};
    for (int d = 1; d <= radius && !front.empty(); ++d) {
      std::vector<std::string> next;
      for (const auto& v : front)
        for (const Edge& e : g.edges_out_of(v))
          if (depth.emplace(e.rng, d).second) next.push_back(e.rng);
      front = std::move(next);
    }
    return depth;
  };
  std::vector<std::string> tops;
  for (int n = 0; n <= n_top; ++n) {
    tops.push_back(x.vertex(n));
    for (const auto& [v, d] : down(tops.back())) info.emplace(v, std::make_pair(n, d));
  }
  LowerSet out;
  for (const auto& [v, ld] : info) out.vertices.push_back(v);

  std::vector<std::string> seeds = out.vertices;
  Presentation w = window(g, seeds, 0);
  if (connectivity_report(w).singly_connected == TriState::kNo)
    fail(ErrorCode::kNotSinglyConnected, "window around stream '" + x.name + "' is not singly connected");

  out.downward_closed = true;
  for (const auto& [v, ld] : info) {
    if (ld.second >= radius) continue;
    for (const Edge& e : g.edges_out_of(v))
      if (!info.count(e.rng)) out.downward_closed = false;
  }
  // Axiom (a): x(max level) bounds both, verified by fresh searches.
  out.directed = true;
  std::size_t n = out.vertices.size();
  std::size_t stride = std::max<std::size_t>(1, n / 24);
  std::map<int, std::map<std::string, int>> below;
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = i; j < n; j += stride) {
      const auto& a = out.vertices[i];
      const auto& b = out.vertices[j];
      int top = std::max(info[a].first, info[b].first);
      if (!below.count(top)) {
        std::map<std::string, int> all;
        for (int t = top; t >= 0; --t)
          for (const auto& [v, d] : down(tops[static_cast<std::size_t>(t)])) all.emplace(v, d);
        below[top] = std::move(all);
      }
      const auto& reach = below[top];
      if (!reach.count(a) || !reach.count(b) || !info.count(tops[static_cast<std::size_t>(top)])) out.directed = false;
      ++out.pairs_checked;
    }
  return out;
}

DiagonalSubgraphs diagonal_subgraphs(const Presentation& p, const std::optional<Grading>& grading) {
  Degree one = Degree::ones(p.rank());
  std::vector<Edge> edges;
  std::vector<std::vector<Morphism>> per_vertex;
  for (int u = 0; u < p.num_vertices(); ++u) {
    per_vertex.push_back(morphisms_from(p, u, one));
    for (const auto& m : per_vertex.back())
      edges.push_back(Edge{morphism_label(p, m), 1, p.vertex_name(m.source), p.vertex_name(m.range)});
  }
  DiagonalSubgraphs out;
  out.diagonal = Presentation(1, p.vertices(), edges, {});
  if (!grading) return out;
  if (!grading->ok || grading->values.size() != static_cast<std::size_t>(p.num_vertices()))
    fail(ErrorCode::kNoGrading, "presentation has no grading function");
  auto on_diagonal = [&](int v) {
    const auto& f = grading->values[static_cast<std::size_t>(v)].values();
    return std::all_of(f.begin(), f.end(), [&f](int c) { return c == f[0]; });
  };
  std::vector<std::string> e0;
  std::vector<Edge> e1;
  for (int u = 0; u < p.num_vertices(); ++u) {
    if (!on_diagonal(u)) continue;
    e0.push_back(p.vertex_name(u));
    for (const auto& m : per_vertex[static_cast<std::size_t>(u)])
      if (on_diagonal(m.source)) e1.push_back(Edge{morphism_label(p, m), 1, p.vertex_name(m.source), p.vertex_name(u)});
  }
  out.e = Presentation(1, e0, e1, {});
  return out;
}

ShiftUniqueness shift_uniqueness_check(const Presentation& p, int max_n) {
  if (connectivity_report(p).singly_connected == TriState::kNo)
    fail(ErrorCode::kNotSinglyConnected, "shift uniqueness needs a singly connected window");
  ShiftUniqueness out;
  for (int u = 0; u < p.num_vertices(); ++u) {
    std::map<int, Morphism> by_source{{u, vertex_morphism(p, u)}};
    for (int n = 1; n <= max_n; ++n) {
      Degree d = Degree::ones(p.rank());
      for (int c = 0; c < p.rank(); ++c) d[c] = n;
      for (auto& m : morphisms_from(p, u, d)) {
        auto [it, inserted] = by_source.emplace(m.source, m);
        if (!inserted) {
          out.ok = false;
          out.witness = std::make_pair(it->second, m);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace hrg
