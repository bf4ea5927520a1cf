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

#include <string>

#include <json.hpp>

#include "hrg/kgraph.hpp"

namespace hrg {

using Json = nlohmann::ordered_json;

/// Throws MalformedInput (bad JSON or schema) or ColorOutOfRange.
Presentation presentation_from_json(const Json& j);
Presentation presentation_from_string(const std::string& text);

Json presentation_to_json(const Presentation& p);
/// Two-space indented, trailing newline. Stable byte-for-byte.
std::string presentation_to_string(const Presentation& p);

std::string presentation_to_dot(const Presentation& p);

Json validation_to_json(const ValidationReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace hrg
