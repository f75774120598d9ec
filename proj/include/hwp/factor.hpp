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

// Plain data shared by builders and the verifier. No construction logic lives
// here so the verifier can consume it without depending on any builder.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hwp {

using VertexId = std::uint32_t;

/// A closed cycle as a vertex sequence; the last vertex is joined to the first.
/// In directed contexts consecutive vertices are arcs in sequence order.
using Cycle = std::vector<VertexId>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A spanning union of disjoint cycles. cycle_length is the declared uniform
/// length, 0 when the factor is not (or not yet known to be) uniform.
struct CycleFactor {
  std::size_t cycle_length = 0;
  std::vector<Cycle> cycles;

  friend bool operator==(const CycleFactor&, const CycleFactor&) = default;
};

/// Factors plus an optional perfect matching on vertices 0..order-1.
struct Decomposition {
  std::size_t order = 0;
  std::vector<CycleFactor> factors;
  std::optional<std::vector<Edge>> one_factor;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

}  // namespace hwp
