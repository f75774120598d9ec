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

// Decompositions of the directed complete cyclic multipartite graphs
// C->(4^k : n) and C->(4^k x y : n) into two uniform factor types.
//
// Labels of C->(4^k x y : n) are (flat(alpha) * x + i) * y + j; vertex ids in
// the returned factors are layer * 4^k x y + label.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/layered_digraph.hpp"
#include "hwp/permutation_engine.hpp"

namespace hwp {

struct EquipartiteRequest {
  unsigned k = 1;
  std::uint32_t x = 1;
  std::uint32_t y = 1;
  std::size_t layers = 3;
  /// Requested number of C_{2^k x n}-factors.
  std::size_t sp = 0;

  std::size_t labels() const { return (std::size_t{1} << (2 * k)) * x * y; }
};

/// s_p in {0, ..., N} minus {1, N - 1}, N = 4^k x y.
bool sp_admissible(unsigned k, std::uint32_t x, std::uint32_t y, std::size_t sp);

/// The 4^k factors H(alpha, phi(alpha)) of C->(4^k : n): r of them C_n-factors
/// and the rest C_{2^k n}-factors. r = 4^k - 1 throws Error(Infeasible).
std::vector<LayeredDigraph> c4k_n_graphs(unsigned k, std::size_t layers, std::size_t r);
std::vector<CycleFactor> decompose_c4k_n(unsigned k, std::size_t layers, std::size_t r);

/// The permutation driving a request: s_p elements move their ring coordinate.
PermutationTable request_permutation(const EquipartiteRequest& req);

/// H(alpha,i,j)(phi(alpha,i,j)) for every domain element, in domain order, each
/// built as the partite product H_4k (x) H_x (x) H_y.
std::vector<LayeredDigraph> c4kxy_n_graphs(const EquipartiteRequest& req);
std::vector<CycleFactor> decompose_c4kxy_n(const EquipartiteRequest& req);

/// Drops orientation. Throws Error(Overlap) when some edge is covered twice.
/// Cycles are canonicalized: least vertex first, then the smaller neighbour.
std::vector<CycleFactor> to_undirected(const std::vector<CycleFactor>& factors);

/// Rotation to least vertex followed by the orientation with the smaller second vertex.
Cycle canonical_undirected(Cycle cycle);

}  // namespace hwp
