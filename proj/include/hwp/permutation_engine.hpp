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

// Permutations with prescribed fixed-first-coordinate structure on the label
// domains Z_4, R, Z_4 x Z_x x Z_y and R x Z_x x Z_y.
//
// Index encodings:
//   R                  flat(alpha)
//   Z_4 x Z_x x Z_y    (gamma * x + i) * y + j
//   R x Z_x x Z_y      (flat(alpha) * x + i) * y + j
// In every encoding the first coordinate of element e is e / first_stride.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hwp {

enum class Motion : std::uint8_t { FixedFirst, MovedFirst };

class PermutationTable {
 public:
  /// Throws Error(Domain) if image is not a bijection of 0..size-1.
  PermutationTable(std::vector<std::uint32_t> image, std::size_t first_stride);

  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator[](std::size_t e) const { return image_.at(e); }
  std::span<const std::uint32_t> images() const noexcept { return image_; }
  std::size_t first_stride() const noexcept { return first_stride_; }

  Motion motion(std::size_t e) const { return motion_.at(e); }
  /// Number of elements whose first coordinate is unchanged.
  std::size_t fixed_first_count() const noexcept;

  friend bool operator==(const PermutationTable&, const PermutationTable&) = default;

 private:
  std::vector<std::uint32_t> image_;
  std::size_t first_stride_;
  std::vector<Motion> motion_;
};

/// Canonical permutation of Z_4 with exactly `fixed` fixed points; 3 throws Error(Infeasible).
PermutationTable rho_z4(std::size_t fixed);

/// Conjugate of per-fiber Z_4 permutations by pi. per_fiber[f] is the fixed
/// count for fiber f = adot * 2^{k-1} + bdot and must lie in {0, 1, 2, 4}.
PermutationTable phi_ring(unsigned k, std::span<const std::size_t> per_fiber);

/// Whether one fiber can carry F first-coordinate-fixed elements: F in
/// {0, ..., 4xy} minus {1, 4xy - 1}, except that the pure ring case x = y = 1
/// admits {0, 1, 2, 4}.
bool fiber_count_admissible(std::uint32_t x, std::uint32_t y, std::size_t fixed);

/// Splits a total fixed count over the 4^{k-1} fibers, filling earlier fibers
/// first. Throws Error(Infeasible) when the total is unreachable.
std::vector<std::size_t> split_fixed_count(unsigned k, std::uint32_t x, std::uint32_t y,
                                           std::size_t total);

/// Bijection of Z_4 x Z_x x Z_y where exactly F elements keep gamma and i and
/// move j by a difference coprime to y, and every other element moves gamma,
/// moves i by a difference coprime to x and keeps j. (The coprimality clause
/// for a modulus equal to 1 is waived.)
PermutationTable lambda_fiber(std::uint32_t x, std::uint32_t y, std::size_t fixed);

/// Lexicographic backtracking for the same conditions; nullopt when the
/// search space or the node budget is exhausted.
std::optional<PermutationTable> lambda_fiber_search(std::uint32_t x, std::uint32_t y,
                                                    std::size_t fixed,
                                                    std::uint64_t node_budget = 2'000'000);

/// theta^{-1} lambda theta on R x Z_x x Z_y with one lambda per pi-fiber.
PermutationTable phi_product(unsigned k, std::uint32_t x, std::uint32_t y,
                             std::span<const std::size_t> per_fiber);

struct ElementVerdict {
  std::uint32_t element = 0;
  bool pass = true;
  std::string clause;  // empty when pass
};

struct ConditionReport {
  std::vector<ElementVerdict> verdicts;
  std::size_t fixed_count = 0;
  bool all_pass = true;
};

/// Checks the product-domain conditions on R x Z_x x Z_y element by element.
ConditionReport validate_conditions(const PermutationTable& t, unsigned k, std::uint32_t x,
                                    std::uint32_t y);

/// Checks the per-fiber conditions on Z_4 x Z_x x Z_y.
ConditionReport validate_fiber_conditions(const PermutationTable& t, std::uint32_t x,
                                          std::uint32_t y);

}  // namespace hwp
