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

#include "hrg/hrg.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "hrg/a2.hpp"
#include "hrg/constructions.hpp"
#include "hrg/pipeline.hpp"
#include "hrg/reports.hpp"

struct hrg_graph {
  std::string name;  // catalog name or file stem, used for named streams
  std::optional<hrg::Presentation> finite;
  std::shared_ptr<hrg::LazyKGraph> lazy;
};

namespace {

using hrg::ErrorCode;
using hrg::Json;

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into status codes and the thread-local
// message.
template <typename F>
int guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return 0;
  } catch (const hrg::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const Json::exception& e) {
    last_error = std::string("MalformedInput: ") + e.what();
    return static_cast<int>(ErrorCode::kMalformedInput);
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return static_cast<int>(ErrorCode::kInternal);
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return static_cast<int>(ErrorCode::kInternal);
  }
}

void require(const void* p, const char* what) {
  if (!p) hrg::fail(ErrorCode::kMalformedInput, std::string(what) + " is null");
}

Json parse_json(const char* text, const char* what) {
  require(text, what);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    hrg::fail(ErrorCode::kMalformedInput, std::string(what) + " is not JSON: " + e.what());
  }
}

const hrg::Presentation& finite_of(const hrg_graph* g) {
  require(g, "graph");
  if (!g->finite) hrg::fail(ErrorCode::kWindowTooSmall, "'" + g->name + "' is infinite; take a window first");
  return *g->finite;
}

hrg::A2Ops a2_ops(const char* group) {
  Json j = group ? parse_json(group, "group") : Json{{"kind", "a2"}, {"preset", "A1"}};
  if (j.is_object() && !j.contains("kind")) j["kind"] = "a2";
  auto g = std::dynamic_pointer_cast<const hrg::A2Group>(hrg::group_from_json(j));
  if (!g) hrg::fail(ErrorCode::kMalformedInput, "group is not of kind a2");
  return g->ops();
}

hrg_graph* wrap(std::string name, hrg::Presentation p) {
  auto* g = new hrg_graph;
  g->name = std::move(name);
  g->finite = std::move(p);
  return g;
}

}  // namespace

extern "C" {

const char* hrg_version(void) { return "1.0.0"; }

const char* hrg_status_name(int status) { return hrg::error_name(static_cast<ErrorCode>(status)); }

const char* hrg_last_error(void) { return last_error.c_str(); }

void hrg_string_free(char* s) { std::free(s); }

int hrg_graph_from_json(const char* json, hrg_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap("inline", hrg::presentation_from_json(parse_json(json, "graph")));
  });
}

int hrg_graph_load(const char* path, hrg_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto p = hrg::presentation_from_string(hrg::read_file(path));
    *out = wrap(std::filesystem::path(path).stem().string(), std::move(p));
  });
}

int hrg_graph_catalog(const char* name, hrg_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto entry = hrg::catalog(name);
    auto* g = new hrg_graph;
    g->name = name;
    g->finite = std::move(entry.finite);
    g->lazy = std::move(entry.lazy);
    *out = g;
  });
}

int hrg_graph_window(const hrg_graph* g, const char* seed, int radius, hrg_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(seed, "seed");
    require(out, "out");
    if (radius < 0) hrg::fail(ErrorCode::kMalformedInput, "radius must be nonnegative");
    hrg::Presentation w;
    if (g->lazy) {
      if (!g->lazy->has_vertex(seed)) hrg::fail(ErrorCode::kUnknownVertex, std::string("no vertex '") + seed + "'");
      w = hrg::window(*g->lazy, {seed}, radius);
    } else {
      hrg::FiniteKGraph fk(*g->finite);
      if (!fk.has_vertex(seed)) hrg::fail(ErrorCode::kUnknownVertex, std::string("no vertex '") + seed + "'");
      w = hrg::window(fk, {seed}, radius);
    }
    *out = wrap(g->name, std::move(w));
  });
}

void hrg_graph_free(hrg_graph* g) { delete g; }

int hrg_graph_is_lazy(const hrg_graph* g) { return g && g->lazy ? 1 : 0; }

int hrg_graph_to_json(const hrg_graph* g, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(hrg::presentation_to_string(finite_of(g)));
  });
}

int hrg_graph_to_dot(const hrg_graph* g, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(hrg::presentation_to_dot(finite_of(g)));
  });
}

int hrg_graph_validate(const hrg_graph* g, int partial, int* pass, char** report) {
  return guarded([&] {
    require(pass, "pass");
    require(report, "report");
    auto r = hrg::validate_presentation(finite_of(g), partial ? hrg::ValidationMode::kPartial
                                                              : hrg::ValidationMode::kFull);
    *pass = r.pass ? 1 : 0;
    *report = copy_string(hrg::dump(hrg::validation_to_json(r)));
  });
}

int hrg_graph_analyze(const hrg_graph* g, const char* options, int* verdict, char** report) {
  return guarded([&] {
    require(verdict, "verdict");
    require(report, "report");
    const auto& p = finite_of(g);
    Json opts = options ? parse_json(options, "options") : Json::object();
    if (!opts.is_object()) hrg::fail(ErrorCode::kMalformedInput, "options must be an object");
    int depth = opts.value("depth", 10);
    if (depth <= 0) hrg::fail(ErrorCode::kMalformedInput, "depth must be positive");
    hrg::Degree bound = hrg::Degree::ones(p.rank()) + hrg::Degree::ones(p.rank());
    if (opts.contains("degree_bound")) bound = hrg::Degree(opts.at("degree_bound").get<std::vector<int>>());
    if (bound.rank() != p.rank()) hrg::fail(ErrorCode::kDegreeOutOfRange, "degree bound has the wrong rank");
    std::optional<hrg::Cocycle> hint;
    if (opts.contains("hint")) hint = hrg::cocycle_from_json(p, opts.at("hint"));
    bool partial = opts.value("partial", false);
    auto check = hrg::validate_presentation(p, partial ? hrg::ValidationMode::kPartial : hrg::ValidationMode::kFull);
    if (!check.pass) {
      std::string witness;
      for (const auto& w : check.witness) witness += (witness.empty() ? "" : ", ") + w;
      hrg::fail(ErrorCode::kMalformedInput, "input is not a k-graph: " + check.failure + " (" + witness + ")");
    }

    auto rep = hrg::embeddability_report(p, depth, bound, hint);
    hrg::AnalysisExtras extras;
    try {
      extras.simply_connected = hrg::simply_connected_test(p, depth, partial);
    } catch (const hrg::Error& e) {
      if (e.code() != ErrorCode::kDisconnected) throw;
    }
    try {
      extras.grading = hrg::grading_function(p);
    } catch (const hrg::Error& e) {
      if (e.code() != ErrorCode::kDisconnected) throw;
    }
    *verdict = static_cast<int>(rep.verdict == hrg::Verdict::kEmbeds      ? HRG_EMBEDS
                                : rep.verdict == hrg::Verdict::kNotEmbeds ? HRG_NOT_EMBEDS
                                                                          : HRG_INCONCLUSIVE);
    *report = copy_string(hrg::dump(hrg::embeddability_to_json(p, rep, extras)));
  });
}

int hrg_build(const char* pipeline, const char* base_dir, hrg_graph** out, int* partial) {
  return guarded([&] {
    require(out, "out");
    auto r = hrg::run_pipeline(parse_json(pipeline, "pipeline"), base_dir ? base_dir : ".");
    if (partial) *partial = r.partial ? 1 : 0;
    *out = wrap("pipeline", std::move(r.graph));
  });
}

int hrg_catalog_list(char** out) {
  return guarded([&] {
    require(out, "out");
    Json list = Json::array();
    for (const auto& names : {hrg::catalog_finite_names(), hrg::catalog_lazy_names()}) {
      for (const auto& n : names) {
        auto e = hrg::catalog(n);
        list.push_back({{"name", n}, {"description", e.description}, {"kind", e.finite ? "finite" : "lazy"}});
      }
    }
    *out = copy_string(hrg::dump(list));
  });
}

int hrg_a2_normalize(const char* group, const char* word, char** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    auto ops = a2_ops(group);
    auto w = hrg::parse_signed_word(ops.triella(), word);
    auto right = hrg::normalize(ops.triella(), w, hrg::NormalSide::kRight);
    auto left = hrg::normalize(ops.triella(), w, hrg::NormalSide::kLeft);
    auto shape = hrg::shape_of_normal(right);
    Json j;
    j["normal_form"] = hrg::format_signed_word(right);
    j["left_normal_form"] = hrg::format_signed_word(left);
    j["shape"] = shape.values();
    j["text"] = hrg::format_signed_word(right) + " " + shape.str();
    *out = copy_string(hrg::dump(j));
  });
}

int hrg_a2_lambda_t(const char* group, hrg_graph** out, char** cocycles) {
  return guarded([&] {
    require(out, "out");
    auto l = hrg::lambda_t(a2_ops(group));
    if (cocycles) {
      Json j = hrg::cocycle_to_json(l.graph, l.c);
      Json b = Json::object();
      for (int e = 0; e < l.graph.num_edges(); ++e) b[l.graph.edge_name(e)] = l.b.group().format(l.b.edge(e));
      j["b"] = b;
      *cocycles = copy_string(hrg::dump(j));
    }
    *out = wrap("lambda-t", std::move(l.graph));
  });
}

int hrg_a2_matrices(const char* group, char** m1, char** m2) {
  return guarded([&] {
    require(m1, "m1");
    require(m2, "m2");
    auto l = hrg::lambda_t(a2_ops(group));
    auto m = hrg::adjacency_matrices(l.graph);
    std::string a = hrg::matrix_csv(m.at(0));
    std::string b = hrg::matrix_csv(m.at(1));
    *m1 = copy_string(a);
    *m2 = copy_string(b);
  });
}

int hrg_orbit_separate(const hrg_graph* g, const char* x, const char* y, int n_max, int radius, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(x, "x");
    require(y, "y");
    require(out, "out");
    if (n_max < 0) hrg::fail(ErrorCode::kMalformedInput, "n_max must be nonnegative");
    std::unique_ptr<hrg::FiniteKGraph> owned;
    const hrg::LazyKGraph* lg = g->lazy.get();
    if (!lg) {
      owned = std::make_unique<hrg::FiniteKGraph>(*g->finite);
      lg = owned.get();
    }
    auto xs = hrg::parse_stream(*lg, g->name, x);
    auto ys = hrg::parse_stream(*lg, g->name, y);
    auto v = hrg::separation_test(*lg, xs, ys, n_max, radius > 0 ? radius : 64);
    *out = copy_string(hrg::dump(hrg::separation_to_json(v)));
  });
}

}  // extern "C"
