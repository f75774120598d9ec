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

// Backtracking for uniform 2-factors that use each edge class exactly once.
//
// With every edge in its own class this is plain backtracking. With classes
// equal to the orbits of a vertex rotation sigma, the search finds base
// factors whose images under the powers of sigma partition the graph.

#include <cstdint>
#include <optional>
#include <vector>

#include "hwp/factor.hpp"

namespace hwp::detail {

struct ClassProblem {
  std::size_t order = 0;
  std::size_t cycle_length = 3;
  std::size_t base_factors = 0;
  /// order*order table, -1 where no usable edge.
  std::vector<int> edge_class;
  /// Classes left over after base_factors * order edges stay unused.
  std::size_t class_count = 0;
  /// Plain mode only: force each factor through vertex 0 and its least unused neighbour.
  bool anchor = false;

  int cls(VertexId a, VertexId b) const { return edge_class[a * order + b]; }
  void set_class(VertexId a, VertexId b, int c) {
    edge_class[a * order + b] = c;
    edge_class[b * order + a] = c;
  }
};

ClassProblem make_problem(std::size_t order, std::size_t cycle_length, std::size_t base_factors);

/// nullopt when the tree is exhausted; Error(SearchExhausted) when the node
/// budget runs out first. The budget is decremented by the nodes visited.
std::optional<std::vector<CycleFactor>> search_base_factors(const ClassProblem& problem,
                                                            std::uint64_t& budget);

/// Images of each base factor under sigma^0 .. sigma^(period-1), in that order.
std::vector<CycleFactor> develop(const std::vector<CycleFactor>& base,
                                 const std::vector<VertexId>& sigma, std::size_t period);

}  // namespace hwp::detail
