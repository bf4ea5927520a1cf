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

// Command-line front end. Talks to the library only through hrg.h.
//
// Exit codes: 0/1/2 for the tri-state results of each subcommand, 64 for
// usage errors and unreadable or malformed input, 70 for internal errors.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrg/hrg.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;
constexpr int kSoftware = 70;

struct Failure {
  int exit_code;
};

// Owning wrappers for C handles and strings.
struct GraphDeleter {
  void operator()(hrg_graph* g) const { hrg_graph_free(g); }
};
using Graph = std::unique_ptr<hrg_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { hrg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_for(int status) {
  switch (status) {
    case HRG_INTERNAL: return kSoftware;
    case HRG_MALFORMED_INPUT:
    case HRG_COLOR_OUT_OF_RANGE:
    case HRG_UNKNOWN_NAME:
    case HRG_UNKNOWN_VERTEX:
    case HRG_DEGREE_OUT_OF_RANGE:
    case HRG_IO: return kUsage;
    default: return 1;
  }
}

// Reports and throws unless status is HRG_OK.
void check(int status) {
  if (status == HRG_OK) return;
  std::cerr << "hrg: " << hrg_last_error() << "\n";
  throw Failure{exit_for(status)};
}

void usage_error(const std::string& message) {
  std::cerr << "hrg: " << message << "\n";
  throw Failure{kUsage};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) {
    std::cerr << "hrg: cannot write '" << path << "'\n";
    throw Failure{kUsage};
  }
}

// Output goes to `path`, or stdout for "" and "-".
void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") std::cout << data;
  else write_text(path, data);
}

std::string fixture_dir() {
  if (const char* env = std::getenv("HRG_FIXTURES"); env && *env) return env;
  return HRG_DEFAULT_FIXTURES;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// A file path, then a fixture file, then a catalog name.
Graph resolve_graph(const std::string& ref) {
  hrg_graph* g = nullptr;
  std::vector<fs::path> candidates{ref};
  for (const auto& name : {ref, ref + ".json", lower(ref) + ".json"}) candidates.push_back(fs::path(fixture_dir()) / name);
  for (const auto& c : candidates) {
    std::error_code ec;
    if (fs::is_regular_file(c, ec)) {
      check(hrg_graph_load(c.string().c_str(), &g));
      return Graph(g);
    }
  }
  int status = hrg_graph_catalog(ref.c_str(), &g);
  if (status == HRG_UNKNOWN_NAME) usage_error("'" + ref + "' is neither a file, a fixture nor a catalog name");
  check(status);
  return Graph(g);
}

// "2,2" or "(2,2)".
std::vector<int> parse_degree(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') body += ch;
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error("bad degree '" + text + "'");
    }
  }
  if (out.empty()) usage_error("bad degree '" + text + "'");
  return out;
}

// --preset or --triella, as a group description for the a2 calls.
std::string a2_group(const std::string& preset, const std::string& triella_file) {
  if (!triella_file.empty()) {
    Json j;
    try {
      j = Json::parse(read_text(triella_file));
    } catch (const Json::exception& e) {
      usage_error(std::string("triella file is not JSON: ") + e.what());
    }
    if (!j.is_object()) usage_error("triella file must hold an object");
    j["kind"] = "a2";
    return j.dump();
  }
  return Json{{"kind", "a2"}, {"preset", preset}}.dump();
}

// --- subcommands -------------------------------------------------------------

int run_validate(const std::string& file, bool partial) {
  Graph g = resolve_graph(file);
  int pass = 0;
  CString report;
  check(hrg_graph_validate(g.get(), partial ? 1 : 0, &pass, &report.p));
  std::cout << report.str();
  return pass ? 0 : 1;
}

int run_analyze(const std::string& file, int depth, const std::string& degree_bound, const std::string& hint,
                bool partial) {
  Graph g = resolve_graph(file);
  Json opts;
  opts["depth"] = depth;
  opts["partial"] = partial;
  if (!degree_bound.empty()) opts["degree_bound"] = parse_degree(degree_bound);
  if (!hint.empty()) {
    try {
      opts["hint"] = Json::parse(read_text(hint));
    } catch (const Json::exception& e) {
      usage_error(std::string("hint is not JSON: ") + e.what());
    }
  }
  int verdict = HRG_INCONCLUSIVE;
  CString report;
  check(hrg_graph_analyze(g.get(), opts.dump().c_str(), &verdict, &report.p));
  std::cout << report.str();
  return verdict;
}

int run_build(const std::string& file, const std::string& out, const std::string& format) {
  std::string text = read_text(file);
  std::string base = fs::path(file).parent_path().string();
  hrg_graph* raw = nullptr;
  int partial = 0;
  check(hrg_build(text.c_str(), base.empty() ? "." : base.c_str(), &raw, &partial));
  Graph g(raw);
  CString s;
  check(format == "dot" ? hrg_graph_to_dot(g.get(), &s.p) : hrg_graph_to_json(g.get(), &s.p));
  emit(out, s.str());
  if (partial) std::cerr << "hrg: note: result is a finite window of an infinite graph\n";
  return 0;
}

int run_a2_normalize(const std::string& group, const std::vector<std::string>& tokens, bool as_json) {
  std::string word;
  for (const auto& t : tokens) word += (word.empty() ? "" : " ") + t;
  CString out;
  check(hrg_a2_normalize(group.c_str(), word.c_str(), &out.p));
  if (as_json) {
    std::cout << out.str();
  } else {
    std::cout << Json::parse(out.str()).at("text").get<std::string>() << "\n";
  }
  return 0;
}

int run_a2_lambda_t(const std::string& group, const std::string& out, std::string cocycle_out) {
  hrg_graph* raw = nullptr;
  CString cocycles;
  check(hrg_a2_lambda_t(group.c_str(), &raw, &cocycles.p));
  Graph g(raw);
  CString s;
  check(hrg_graph_to_json(g.get(), &s.p));
  emit(out, s.str());
  if (cocycle_out.empty() && !out.empty() && out != "-") {
    fs::path p(out);
    cocycle_out = (p.parent_path() / (p.stem().string() + ".cocycle.json")).string();
  }
  if (!cocycle_out.empty()) write_text(cocycle_out, cocycles.str());
  return 0;
}

int run_a2_matrices(const std::string& group, const std::string& prefix) {
  CString m1, m2;
  check(hrg_a2_matrices(group.c_str(), &m1.p, &m2.p));
  write_text(prefix + "1.csv", m1.str());
  write_text(prefix + "2.csv", m2.str());
  std::cout << prefix << "1.csv\n" << prefix << "2.csv\n";
  return 0;
}

int run_orbit_separate(const std::string& graph, const std::string& x, const std::string& y, int n_max,
                       int radius) {
  Graph g = resolve_graph(graph);
  CString out;
  int status = hrg_orbit_separate(g.get(), x.c_str(), y.c_str(), n_max, radius, &out.p);
  if (status == HRG_SHIFT_EQUIVALENT_DETECTED) {
    Json j{{"verdict", "ShiftEquivalentDetected"}, {"message", hrg_last_error()}};
    std::cout << j.dump(2) << "\n";
    return 2;
  }
  check(status);
  std::cout << out.str();
  return Json::parse(out.str()).at("verdict") == "SeparatedAt" ? 0 : 1;
}

int run_catalog_list() {
  CString out;
  check(hrg_catalog_list(&out.p));
  for (const auto& e : Json::parse(out.str()))
    std::cout << e.at("name").get<std::string>() << "\t" << e.at("kind").get<std::string>() << "\t"
              << e.at("description").get<std::string>() << "\n";
  return 0;
}

int run_catalog_show(const std::string& name, const std::string& format, const std::string& seed, int radius) {
  hrg_graph* raw = nullptr;
  check(hrg_graph_catalog(name.c_str(), &raw));
  Graph g(raw);
  if (hrg_graph_is_lazy(g.get()) || !seed.empty()) {
    if (seed.empty()) usage_error("'" + name + "' is infinite; pass --seed and --radius");
    hrg_graph* w = nullptr;
    check(hrg_graph_window(g.get(), seed.c_str(), radius, &w));
    g.reset(w);
  }
  CString s;
  check(format == "dot" ? hrg_graph_to_dot(g.get(), &s.p) : hrg_graph_to_json(g.get(), &s.p));
  std::cout << s.str();
  return 0;
}

// Writes every finite catalog entry to <dir>/<lowercase name>.json.
int run_catalog_emit(const std::string& dir) {
  CString list;
  check(hrg_catalog_list(&list.p));
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const auto& e : Json::parse(list.str())) {
    if (e.at("kind") != "finite") continue;
    auto name = e.at("name").get<std::string>();
    hrg_graph* raw = nullptr;
    check(hrg_graph_catalog(name.c_str(), &raw));
    Graph g(raw);
    CString s;
    check(hrg_graph_to_json(g.get(), &s.p));
    auto path = (fs::path(dir) / (lower(name) + ".json")).string();
    write_text(path, s.str());
    std::cout << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hrg: higher-rank graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hrg_version());
  int code = 0;

  auto* validate = app.add_subcommand("validate", "Check the k-graph conditions of a presentation");
  std::string validate_file;
  bool validate_partial = false;
  validate->add_option("file", validate_file, "Presentation JSON, fixture or catalog name")->required();
  validate->add_flag("--partial", validate_partial, "Tolerate missing squares (windows of infinite graphs)");
  validate->callback([&] { code = run_validate(validate_file, validate_partial); });

  auto* analyze = app.add_subcommand("analyze", "Embeddability report: exit 0 embeds, 1 does not, 2 inconclusive");
  std::string analyze_file, degree_bound, hint;
  bool analyze_partial = false;
  int depth = 10;
  analyze->add_option("file", analyze_file, "Presentation JSON, fixture or catalog name")->required();
  analyze->add_option("--depth", depth, "Collapse search depth")->check(CLI::PositiveNumber);
  analyze->add_option("--degree-bound", degree_bound, "Injectivity check bound, e.g. 2,2 (default all twos)");
  analyze->add_option("--hint", hint, "Cocycle JSON to try as an essential cocycle")->check(CLI::ExistingFile);
  analyze->add_flag("--partial", analyze_partial, "Input is a window: tolerate squares missing at the boundary");
  analyze->callback([&] { code = run_analyze(analyze_file, depth, degree_bound, hint, analyze_partial); });

  auto* build = app.add_subcommand("build", "Run a construction pipeline");
  std::string pipeline, build_out, build_format = "json";
  build->add_option("pipeline", pipeline, "Pipeline JSON")->required();
  build->add_option("-o,--out", build_out, "Output file (default stdout)");
  build->add_option("--format", build_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build->callback([&] { code = run_build(pipeline, build_out, build_format); });

  auto* a2 = app.add_subcommand("a2", "Tools for A2-tilde groups");
  a2->require_subcommand(1);
  std::string preset = "A1", triella;
  auto add_group_options = [&](CLI::App* sub) {
    sub->add_option("--preset", preset, "Built-in triella")->check(CLI::IsMember({"A1"}));
    sub->add_option("--triella", triella, "Triella JSON {q, lines, lambda, triples}")->check(CLI::ExistingFile);
  };
  auto* normalize = a2->add_subcommand("normalize", "Right normal form and shape of a word");
  std::vector<std::string> word;
  bool normalize_json = false;
  add_group_options(normalize);
  normalize->add_option("word", word, "Tokens aN and aN^-1")->required();
  normalize->add_flag("--json", normalize_json, "Print the JSON result");
  normalize->callback([&] { code = run_a2_normalize(a2_group(preset, triella), word, normalize_json); });

  auto* lt = a2->add_subcommand("lambda-t", "Emit the 2-graph of the group and its cocycle sidecar");
  std::string lt_out, lt_cocycle;
  add_group_options(lt);
  lt->add_option("--out", lt_out, "Presentation JSON (default stdout)");
  lt->add_option("--cocycle-out", lt_cocycle, "Cocycle sidecar (default <out stem>.cocycle.json)");
  lt->callback([&] { code = run_a2_lambda_t(a2_group(preset, triella), lt_out, lt_cocycle); });

  auto* matrices = a2->add_subcommand("matrices", "Adjacency matrices of the 2-graph as CSV");
  std::string prefix = "M";
  add_group_options(matrices);
  matrices->add_option("--out-prefix", prefix, "Writes <prefix>1.csv and <prefix>2.csv");
  matrices->callback([&] { code = run_a2_matrices(a2_group(preset, triella), prefix); });

  auto* orbit = app.add_subcommand("orbit", "Orbit-space tests");
  orbit->require_subcommand(1);
  auto* separate = orbit->add_subcommand(
      "separate", "Separation search: exit 0 separated, 1 not within n-max, 2 shift equivalent");
  std::string graph, x, y;
  int n_max = 20, radius = 64;
  separate->add_option("--graph", graph, "Graph name or presentation file")->required();
  separate->add_option("--x", x, "Stream spec")->required();
  separate->add_option("--y", y, "Stream spec")->required();
  separate->add_option("--n-max", n_max, "Largest n searched")->check(CLI::NonNegativeNumber);
  separate->add_option("--radius", radius, "Search radius for upper bounds")->check(CLI::PositiveNumber);
  separate->callback([&] { code = run_orbit_separate(graph, x, y, n_max, radius); });

  auto* cat = app.add_subcommand("catalog", "Built-in fixtures");
  auto* list = cat->add_subcommand("list", "Names, kinds and descriptions");
  list->callback([&] { code = run_catalog_list(); });
  auto* show = cat->add_subcommand("show", "Print one entry (windows for infinite entries)");
  std::string show_name, show_format = "json", seed;
  int show_radius = 2;
  show->add_option("name", show_name)->required();
  show->add_option("--format", show_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  show->add_option("--seed", seed, "Window seed vertex");
  show->add_option("--radius", show_radius, "Window radius")->check(CLI::NonNegativeNumber);
  show->callback([&] { code = run_catalog_show(show_name, show_format, seed, show_radius); });
  auto* emit_all = cat->add_subcommand("emit", "Write every finite entry as <dir>/<name>.json");
  std::string emit_dir = ".";
  emit_all->add_option("--dir", emit_dir, "Target directory");
  emit_all->callback([&] { code = run_catalog_emit(emit_dir); });
  cat->callback([&] {
    if (cat->get_subcommands().empty()) code = run_catalog_list();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const Json::exception& e) {
    std::cerr << "hrg: unexpected output: " << e.what() << "\n";
    return kSoftware;
  }
  return code;
}
