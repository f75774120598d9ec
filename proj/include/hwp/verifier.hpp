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

// Independent checker for claimed decompositions. Depends only on the plain
// data in factor.hpp; none of the builders are consulted.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hwp/factor.hpp"

namespace hwp {

/// K_N; a one-factor, if present, is part of the partition.
struct CompleteTarget {};
/// K_N with N even; the one-factor must be present and perfect.
struct CompleteMinusMatchingTarget {};
/// K_(h:u); vertex p*h + w is the w-th vertex of part p.
struct EquipartiteTarget {
  std::size_t part_size = 1;
  std::size_t parts = 1;
};
/// C->(q:n) checked arc by arc; vertex t*q + label sits on layer t.
struct CyclicMultipartiteTarget {
  std::size_t labels = 1;
  std::size_t layers = 3;
};

using Target = std::variant<CompleteTarget, CompleteMinusMatchingTarget, EquipartiteTarget,
                            CyclicMultipartiteTarget>;

/// CompleteMinusMatchingTarget for even order, CompleteTarget otherwise.
Target complete_target_for(std::size_t order);

enum class ViolationKind {
  Shape,          // vertex out of range, loop, undeclared length
  Degree,         // factor not 2-regular (or in/out-degree != 1 when directed)
  CycleLength,    // a cycle differs from the declared length
  ForeignEdge,    // edge not in the target graph
  DuplicateEdge,  // edge covered more than once
  MissingEdge,    // target edge never covered
  Matching,       // one-factor absent, not perfect, or not allowed
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string witness;
};

struct VerificationReport {
  bool pass = true;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
};

/// A factor as a bare edge (or arc) list with its declared cycle length.
struct EdgeFactor {
  std::size_t cycle_length = 0;
  std::vector<Edge> edges;
};

/// Edges of each factor read off its cycles (consecutive pairs plus the wrap).
std::vector<EdgeFactor> edge_factors(const Decomposition& d);

VerificationReport verify_edge_factors(std::size_t order, std::span<const EdgeFactor> factors,
                                       const std::optional<std::vector<Edge>>& one_factor,
                                       const Target& target);

VerificationReport verify_decomposition(const Decomposition& d, const Target& target);

struct Spectrum {
  std::map<std::size_t, std::size_t> counts;  // uniform cycle length -> factor count
  std::size_t mixed = 0;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum spectrum(const Decomposition& d);

}  // namespace hwp
