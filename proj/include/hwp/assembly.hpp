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

// K_vm = K_(v:m) + mK_v. The equipartite side comes from a C_z-factorization
// of K_(v1:m) whose vertices are blown up into bricks C_(N:z), N = 4^k x1 y1;
// the clique side is one uniform design of K_v copied onto every part.
//
// Final vertex id: p*v + u*N + flat(omega), p the part, u in Z_v1, and
// flat(omega) = ((a*2^k + b)*x1 + i)*y1 + j.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/ingredients.hpp"

namespace hwp {

struct HwpInstance {
  std::uint32_t x = 3;
  std::uint32_t y = 3;
  unsigned k = 1;
  std::size_t v = 12;
  std::size_t m = 3;
  /// Factor counts; the feasibility probe may leave them unset.
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;

  std::size_t long_length() const { return (std::size_t{1} << k) * x; }
  std::size_t short_length() const { return y; }
};

struct HypothesisItem {
  std::string id;
  std::string statement;
  bool pass = false;
  /// Informational items never make the report fail.
  bool blocking = true;
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisItem> items;

  bool all_pass() const;
  std::vector<const HypothesisItem*> failures() const;
  const HypothesisItem* find(const std::string& id) const;
};

HypothesisReport check_hypotheses(const HwpInstance& inst);

enum class CliqueType { Long, Short };

struct SplitPlan {
  std::size_t z = 0, x1 = 0, y1 = 0, v1 = 0;
  std::size_t brick_labels = 0;  // N = 4^k x1 y1
  std::size_t r_alpha = 0, s_alpha = 0, r_beta = 0, s_beta = 0;
  CliqueType clique = CliqueType::Long;
  /// One entry per C_z-factor of K_(v1:m): how many of its N layers are
  /// C_{2^k x}-factors. The rest are C_y-factors.
  std::vector<std::size_t> brick_sp;
};

/// Brick values allowed for one C_(N:z): {0..N} minus 1, and minus N-1 too
/// unless x1 = y1 = 1.
bool brick_sp_allowed(const SplitPlan& plan, std::size_t sp);

/// Throws Error(InfeasibleSplit) naming the obstruction.
SplitPlan plan_split(const HwpInstance& inst);

/// v(m-1)/2 factors of K_(v:m) on ids p*v + w, in ingredient-factor order.
std::vector<CycleFactor> weight_and_fill(const EquipartiteDesign& design, const SplitPlan& plan,
                                         const HwpInstance& inst);

struct HwpSolution {
  Decomposition decomposition;
  SplitPlan plan;
  DesignSource equipartite_source = DesignSource::Direct;
  DesignSource complete_source = DesignSource::Direct;
};

/// Factors ordered C_{2^k x} first, then C_y, each in construction order. The
/// result has passed the verifier. Throws Infeasible when a hypothesis fails.
HwpSolution solve_hwp(const HwpInstance& inst, const IngredientConfig& config = {});

}  // namespace hwp
