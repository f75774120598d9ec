// Copyright 2026 The hwp-solver Authors
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

// Decomposition files: the JSON schema shared by the solver output and the
// ingredient registry, plus the plain-text rendering.
//
//   {"kind": ..., "order": N, "params": {...}, "one_factor": [[a,b],...] | null,
//    "factors": [{"cycle_length": L, "cycles": [[v0,v1,...],...]}, ...],
//    "provenance": {...}}
//
// "kind" is omitted for Hamilton-Waterloo solutions (params x,y,k,v,m,r,s) and
// is one of "equipartite" (params h,u,z), "complete" (params v,n) or
// "cyclic" (params k,x,y,n,sp; directed cycles) otherwise. "provenance" is optional.

#include <optional>
#include <string>
#include <string_view>

#include "hwp/factor.hpp"
#include "hwp/verifier.hpp"
#include "json.hpp"

namespace hwp {

struct DecompositionFile {
  std::optional<std::string> kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Decomposition decomposition;
  std::optional<nlohmann::ordered_json> provenance;
};

nlohmann::ordered_json to_json(const DecompositionFile& file);
/// Compact JSON followed by a newline; byte-stable for equal inputs.
std::string to_json_text(const DecompositionFile& file);

/// Throws Error(Corrupt) on malformed input.
DecompositionFile parse_decomposition(std::string_view text);

/// One block per factor, cycles in parentheses.
std::string to_text(const DecompositionFile& file);

/// Undirected DOT graph with the factor index on every edge.
std::string to_dot(const DecompositionFile& file);

/// Verification target implied by kind and params. Throws Error(Corrupt)
/// when the params do not determine one.
Target infer_target(const DecompositionFile& file);

std::string read_file(const std::string& path);
/// Writes via a temporary sibling and an atomic rename.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace hwp
