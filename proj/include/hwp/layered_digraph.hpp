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

// n-layer cyclic multipartite digraphs. Arcs only join layer t to layer
// t+1 mod n; labels within a layer are 0..q-1. Vertex (t, label) has flat id
// t*q + label, which is also the id used in extracted cycle factors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/ring4k.hpp"

namespace hwp {

struct Arc {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class LayeredDigraph {
 public:
  /// An arc-free graph. Throws Error(Domain) for layers < 3 or labels == 0.
  LayeredDigraph(std::size_t layers, std::size_t labels);

  /// Every gap t maps label y to maps[t][y]. maps must hold one bijection per layer.
  static LayeredDigraph from_maps(std::size_t labels, const std::vector<std::vector<std::uint32_t>>& maps);

  std::size_t layers() const noexcept { return gaps_.size(); }
  std::size_t labels() const noexcept { return labels_; }

  /// Arcs from layer t to layer t+1 mod n, sorted.
  std::span<const Arc> gap(std::size_t t) const { return gaps_.at(t); }
  /// Replaces gap t. Arcs are sorted; duplicates or out-of-range labels throw Error(Domain).
  void set_gap(std::size_t t, std::vector<Arc> arcs);

  std::size_t arc_count() const noexcept;
  bool contains(std::size_t t, Arc arc) const;

  friend bool operator==(const LayeredDigraph&, const LayeredDigraph&) = default;

 private:
  std::size_t labels_;
  std::vector<std::vector<Arc>> gaps_;
};

/// Complete directed cyclic multipartite graph: q^2 arcs in every gap.
LayeredDigraph complete_cyclic(std::size_t labels, std::size_t layers);

/// Keeps only the gap between layers h-1 and h (1 <= h <= n; h = n is the
/// closing gap n-1 -> 0).
LayeredDigraph f_gap(const LayeredDigraph& g, std::size_t h);

/// g with its closing gap (n-1 -> 0) taken from `last`.
LayeredDigraph with_last_gap_of(const LayeredDigraph& g, const LayeredDigraph& last);

/// The ring builder T(alpha) over n layers, labels flat(y). Supported for
/// n = 3 and n >= 5; n = 4 throws Error(Unsupported).
LayeredDigraph t4k_build(const RingElement& alpha, std::size_t layers);

/// T(alpha) with the closing gap of T(beta). Uniform cycle length n when
/// alpha == beta and 2^k * n when difference_class(alpha, beta) is Adjacent;
/// for the Other class the graph is still built but no length is promised.
LayeredDigraph h4k_build(const RingElement& alpha, const RingElement& beta, std::size_t layers);

/// Per-gap difference multipliers for T_x(i): every entry a unit mod x, the
/// last entry -1 and the entries summing to 0 mod x. Stored as residues in [0, x).
struct UnitMultiplierVector {
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> entries;

  friend bool operator==(const UnitMultiplierVector&, const UnitMultiplierVector&) = default;
};

/// Throws Error(Domain) unless x is odd and n >= 3.
UnitMultiplierVector choose_multipliers(std::uint32_t x, std::size_t layers);
bool is_valid(const UnitMultiplierVector& u);

/// Gap t carries y -> y + u_t * i (mod x).
LayeredDigraph tx_build(std::uint32_t x, std::uint32_t i, std::size_t layers, const UnitMultiplierVector& u);
/// T_x(i) with the closing gap of T_x(s): gcd(x, i - s) cycles of length n*x/gcd.
LayeredDigraph hx_build(std::uint32_t x, std::uint32_t i, std::uint32_t s, std::size_t layers,
                        const UnitMultiplierVector& u);

/// Layered product; label (g, h) becomes g * |H| + h.
LayeredDigraph partite_product(const LayeredDigraph& g, const LayeredDigraph& h);

/// Arc-set union of pairwise arc-disjoint graphs. Throws Error(Overlap) naming a duplicated arc.
LayeredDigraph oplus(std::span<const LayeredDigraph> graphs);

/// Partition of the vertices into directed cycles, each rotated to start at its
/// least vertex id, cycles sorted. Requires in- and out-degree 1 everywhere;
/// otherwise throws Error(NotAFactor) naming an offending vertex.
CycleFactor cycles_of(const LayeredDigraph& g);

/// DOT rendering with one rank per layer.
std::string to_dot(const LayeredDigraph& g,
                   const std::function<std::string(std::uint32_t)>& label_name = {});

}  // namespace hwp
