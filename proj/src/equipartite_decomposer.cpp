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

#include "hwp/equipartite_decomposer.hpp"

#include <algorithm>

#include "hwp/error.hpp"
#include "hwp/ring4k.hpp"

namespace hwp {

bool sp_admissible(unsigned k, std::uint32_t x, std::uint32_t y, std::size_t sp) {
  const std::size_t total = ring_size(k) * x * y;
  return sp <= total && sp != 1 && sp != total - 1;
}

std::vector<LayeredDigraph> c4k_n_graphs(unsigned k, std::size_t layers, std::size_t r) {
  const std::size_t size = ring_size(k);
  if (r > size || r == size - 1) {
    throw Error(ErrorKind::Infeasible, "C->(4^k:n) has no decomposition with r = " +
                                           std::to_string(r) + " C_n-factors for k = " +
                                           std::to_string(k));
  }
  const auto per_fiber = split_fixed_count(k, 1, 1, r);
  const PermutationTable phi = phi_ring(k, per_fiber);
  std::vector<LayeredDigraph> graphs;
  graphs.reserve(size);
  for (const RingElement& alpha : ring_elements(k)) {
    graphs.push_back(h4k_build(alpha, RingElement::from_flat(phi[alpha.flat()], k), layers));
  }
  return graphs;
}

std::vector<CycleFactor> decompose_c4k_n(unsigned k, std::size_t layers, std::size_t r) {
  std::vector<CycleFactor> out;
  for (const auto& g : c4k_n_graphs(k, layers, r)) out.push_back(cycles_of(g));
  return out;
}

namespace {

void check_request(const EquipartiteRequest& req) {
  if (req.x % 2 == 0 || req.y % 2 == 0) {
    throw Error(ErrorKind::Domain, "x and y must be odd");
  }
  if (req.layers < 3 || req.layers == 4) {
    throw Error(ErrorKind::Unsupported,
                "brick decompositions need n = 3 or n >= 5, got " + std::to_string(req.layers));
  }
  if (!sp_admissible(req.k, req.x, req.y, req.sp)) {
    throw Error(ErrorKind::Infeasible, "s_p = " + std::to_string(req.sp) +
                                           " is not admissible for 4^k x y = " +
                                           std::to_string(req.labels()));
  }
}

}  // namespace

PermutationTable request_permutation(const EquipartiteRequest& req) {
  check_request(req);
  const auto per_fiber = split_fixed_count(req.k, req.x, req.y, req.labels() - req.sp);
  return phi_product(req.k, req.x, req.y, per_fiber);
}

std::vector<LayeredDigraph> c4kxy_n_graphs(const EquipartiteRequest& req) {
  const PermutationTable phi = request_permutation(req);
  const std::uint32_t x = req.x, y = req.y;
  const std::uint32_t xy = x * y;
  const UnitMultiplierVector ux = choose_multipliers(x, req.layers);
  const UnitMultiplierVector uy = choose_multipliers(y, req.layers);
  std::vector<LayeredDigraph> hx_cache, hy_cache;
  std::vector<LayeredDigraph> graphs;
  graphs.reserve(req.labels());
  for (std::uint32_t e = 0; e < req.labels(); ++e) {
    const std::uint32_t f = phi[e];
    const RingElement alpha = RingElement::from_flat(e / xy, req.k);
    const RingElement beta = RingElement::from_flat(f / xy, req.k);
    const LayeredDigraph ring = h4k_build(alpha, beta, req.layers);
    const LayeredDigraph hx = hx_build(x, (e / y) % x, (f / y) % x, req.layers, ux);
    const LayeredDigraph hy = hx_build(y, e % y, f % y, req.layers, uy);
    graphs.push_back(partite_product(partite_product(ring, hx), hy));
  }
  return graphs;
}

std::vector<CycleFactor> decompose_c4kxy_n(const EquipartiteRequest& req) {
  std::vector<CycleFactor> out;
  for (const auto& g : c4kxy_n_graphs(req)) out.push_back(cycles_of(g));
  return out;
}

Cycle canonical_undirected(Cycle cycle) {
  if (cycle.size() < 3) return cycle;
  const auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<CycleFactor> to_undirected(const std::vector<CycleFactor>& factors) {
  std::vector<Edge> edges;
  std::vector<CycleFactor> out;
  out.reserve(factors.size());
  for (const auto& factor : factors) {
    CycleFactor undirected{factor.cycle_length, {}};
    for (const Cycle& c : factor.cycles) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        const VertexId a = c[t], b = c[(t + 1) % c.size()];
        edges.push_back({std::min(a, b), std::max(a, b)});
      }
      undirected.cycles.push_back(canonical_undirected(c));
    }
    std::sort(undirected.cycles.begin(), undirected.cycles.end());
    out.push_back(std::move(undirected));
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorKind::Overlap, "edge {" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) +
                                        "} is covered twice after dropping orientation");
  }
  return out;
}

}  // namespace hwp
