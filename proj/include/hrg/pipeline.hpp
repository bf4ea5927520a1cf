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
#include <string>
#include <vector>

#include "hrg/json_io.hpp"

namespace hrg {

/// {"steps": [{"op": "...", "as": "name", "input": "name", ...}, ...]}.
/// Each step reads its input from a named earlier result, or from the
/// previous step when "input" is absent, and stores its output under "as"
/// (default "step<i>"). Ops:
///   catalog {name, seed?, radius?}      lazy entries need seed and radius
///   load {path}                         relative to the pipeline file
///   inline {graph}
///   cartesian_product {inputs: [a, b]}
///   affine_pullback {rows: [[..]], offset: [..]}
///   skew_product {cocycle: "free" | "degree" | {group, labels}, seed?, radius}
///   skew_quotient
///   crossed_product {automorphisms: [{vertex: {}, edge: {}}]}
///   action_graph {n, automorphisms}
///   monoidal_2graph {n1, n2, theta | theta_file}   theta entries [j', i']
///   yang_baxter {k, sigma} or {k, n, r}             r entries [f', e']
///   permute_colors {perm}
///   restrict_colors {colors}
///   lambda_t {preset} or {triella: {q, lines, lambda, triples}}
/// Every output is validated, partially when it is a window of an infinite
/// graph. Errors keep their code and name the failing step.
struct PipelineResult {
  Presentation graph;
  bool partial = false;
  std::map<std::string, Presentation> named;
};

PipelineResult run_pipeline(const Json& spec, const std::string& base_dir = ".");

}  // namespace hrg
