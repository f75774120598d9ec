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

// Ingredient designs: resolvable C_z-factorizations of K_(h:u) and
// C_n-factorizations of K_v (plus a perfect matching when v is even).
//
// Vertex p*h + w of K_(h:u) is the w-th vertex of part p. Every design handed
// out by this module has been checked by the verifier, whatever its source.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hwp/factor.hpp"

namespace hwp {

struct Feasibility {
  bool ok = false;
  /// The condition that decides the answer, e.g. "(h,u,z) != (2,3,3)".
  std::string reason;
};

Feasibility feasible_equipartite(std::size_t h, std::size_t u, std::size_t z);
Feasibility feasible_complete(std::size_t v, std::size_t n);

struct EquipartiteDesign {
  std::size_t h = 1;
  std::size_t u = 2;
  std::size_t z = 3;
  std::vector<CycleFactor> factors;

  Decomposition decomposition() const;
};

struct CompleteDesign {
  std::size_t v = 3;
  std::size_t n = 3;
  std::vector<CycleFactor> factors;
  std::optional<std::vector<Edge>> one_factor;

  Decomposition decomposition() const;
};

/// Where a design came from; reported by the CLI.
enum class DesignSource { Registry, Direct, Rotational, Backtracking };
const char* to_string(DesignSource source) noexcept;

struct IngredientConfig {
  /// Registry directory; when empty the HWP_REGISTRY environment variable is used.
  std::optional<std::string> registry;
  std::size_t equipartite_cap = 48;  // bound on u*h for searched designs
  std::size_t complete_cap = 40;     // bound on v for searched designs
  std::uint64_t node_budget = 20'000'000;

  std::optional<std::string> registry_dir() const;
};

/// Strategy: registry, direct construction, rotational search, backtracking.
/// Errors: Infeasible, CapExceeded, SearchExhausted, Verification.
EquipartiteDesign build_equipartite(std::size_t h, std::size_t u, std::size_t z,
                                    const IngredientConfig& config = {},
                                    DesignSource* source = nullptr);
CompleteDesign build_complete(std::size_t v, std::size_t n, const IngredientConfig& config = {},
                              DesignSource* source = nullptr);

/// Hamilton cycles of K_v (v odd) or of K_v minus the returned matching (v even).
CompleteDesign walecki(std::size_t v);

struct RegistryKey {
  std::string kind;  // "equipartite" or "complete"
  std::vector<std::pair<std::string, std::size_t>> params;

  static RegistryKey equipartite(std::size_t h, std::size_t u, std::size_t z);
  static RegistryKey complete(std::size_t v, std::size_t n);
  std::string file_name() const;

  friend bool operator==(const RegistryKey&, const RegistryKey&) = default;
};

/// Throws Error(Verification) when the design does not match its key.
void registry_store(const std::string& dir, const RegistryKey& key, const Decomposition& design);
/// Throws NotFound, Corrupt or Verification.
Decomposition registry_load(const std::string& dir, const RegistryKey& key);

void registry_store(const std::string& dir, const EquipartiteDesign& design);
void registry_store(const std::string& dir, const CompleteDesign& design);

}  // namespace hwp
