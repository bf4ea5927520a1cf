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

#include <optional>
#include <string>

#include "hrg/groupoid.hpp"
#include "hrg/json_io.hpp"
#include "hrg/orbit.hpp"

namespace hrg {

/// {"kind": "free", "rank": 3}, {"kind": "abelian", "rank": 1, "torsion": [2]},
/// {"kind": "cyclic", "order": 4}, {"kind": "a2", "preset": "A1"}.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const Group& g);

/// {"group": {...}, "labels": {"<edge id>": "<element>"}}; missing labels
/// are the identity.
Cocycle cocycle_from_json(const Presentation& p, const Json& j);
Json cocycle_to_json(const Presentation& p, const Cocycle& c);

/// c(e_i) = t_{i+1} into the free group on the edges, in edge order.
Cocycle free_cocycle(const Presentation& p);

Json morphism_to_json(const Presentation& p, const Morphism& m);
Json abelian_to_json(const AbelianInvariants& a);
Json proof_to_json(const Presentation& p, const CollapseProof& proof);

struct AnalysisExtras {
  std::optional<SimplyConnectedResult> simply_connected;
  std::optional<Grading> grading;
};
Json embeddability_to_json(const Presentation& p, const EmbeddabilityReport& r, const AnalysisExtras& extras);

Json separation_to_json(const SeparationVerdict& v);

/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace hrg
