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

// The five mutation operators used to probe the verifier. Each returns
// nullopt when it does not apply at the chosen position.

#include <optional>
#include <random>

#include "hwp/factor.hpp"
#include "hwp/verifier.hpp"

namespace mutation {

enum class Op { DeleteEdge, DuplicateEdge, SwapInCycle, DropCycle, RelabelVertex };
inline constexpr Op kAll[] = {Op::DeleteEdge, Op::DuplicateEdge, Op::SwapInCycle, Op::DropCycle,
                              Op::RelabelVertex};

inline const char* name(Op op) {
  switch (op) {
    case Op::DeleteEdge: return "delete edge";
    case Op::DuplicateEdge: return "duplicate edge";
    case Op::SwapInCycle: return "swap two vertices in one cycle";
    case Op::DropCycle: return "drop a cycle";
    case Op::RelabelVertex: return "relabel one vertex";
  }
  return "?";
}

// Edge-level: factor f loses one of its edges.
inline std::vector<hwp::EdgeFactor> delete_edge(const hwp::Decomposition& d, std::mt19937& rng) {
  auto fs = hwp::edge_factors(d);
  auto& edges = fs[rng() % fs.size()].edges;
  edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
  return fs;
}

// Factor b is rearranged so that it also contains an edge of factor a.
inline std::optional<hwp::Decomposition> duplicate_edge(hwp::Decomposition d, std::mt19937& rng) {
  if (d.factors.size() < 2) return std::nullopt;
  const std::size_t fa = rng() % d.factors.size();
  std::size_t fb = rng() % (d.factors.size() - 1);
  if (fb >= fa) ++fb;
  const hwp::Cycle& ca = d.factors[fa].cycles[rng() % d.factors[fa].cycles.size()];
  const std::size_t ia = rng() % ca.size();
  const hwp::VertexId a = ca[ia], b = ca[(ia + 1) % ca.size()];
  // In factor b, put vertex b right after a by exchanging b with a's successor.
  hwp::VertexId* succ = nullptr;
  hwp::VertexId* where_b = nullptr;
  for (hwp::Cycle& c : d.factors[fb].cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == a) succ = &c[(i + 1) % c.size()];
      if (c[i] == b) where_b = &c[i];
    }
  }
  if (!succ || !where_b) return std::nullopt;
  std::swap(*succ, *where_b);
  return d;
}

inline std::optional<hwp::Decomposition> swap_in_cycle(hwp::Decomposition d, std::mt19937& rng) {
  std::vector<hwp::Cycle*> long_cycles;
  for (auto& f : d.factors) {
    for (auto& c : f.cycles) {
      if (c.size() >= 4) long_cycles.push_back(&c);
    }
  }
  if (long_cycles.empty()) return std::nullopt;
  hwp::Cycle& c = *long_cycles[rng() % long_cycles.size()];
  const std::size_t i = rng() % c.size();
  std::swap(c[i], c[(i + 1) % c.size()]);
  return d;
}

inline std::optional<hwp::Decomposition> drop_cycle(hwp::Decomposition d, std::mt19937& rng) {
  auto& f = d.factors[rng() % d.factors.size()];
  f.cycles.erase(f.cycles.begin() + static_cast<long>(rng() % f.cycles.size()));
  return d;
}

inline std::optional<hwp::Decomposition> relabel_vertex(hwp::Decomposition d, std::mt19937& rng) {
  if (d.order < 2) return std::nullopt;
  auto& f = d.factors[rng() % d.factors.size()];
  auto& c = f.cycles[rng() % f.cycles.size()];
  auto& v = c[rng() % c.size()];
  v = static_cast<hwp::VertexId>((v + 1 + rng() % (d.order - 1)) % d.order);
  return d;
}

/// Outcome of one mutation: applied or not, and whether the verifier rejected it.
struct Outcome {
  bool applied = false;
  bool detected = false;
};

inline Outcome apply_and_check(Op op, const hwp::Decomposition& d, const hwp::Target& target,
                               std::mt19937& rng) {
  if (op == Op::DeleteEdge) {
    const auto fs = delete_edge(d, rng);
    return {true, !hwp::verify_edge_factors(d.order, fs, d.one_factor, target).pass};
  }
  std::optional<hwp::Decomposition> m;
  switch (op) {
    case Op::DuplicateEdge: m = duplicate_edge(d, rng); break;
    case Op::SwapInCycle: m = swap_in_cycle(d, rng); break;
    case Op::DropCycle: m = drop_cycle(d, rng); break;
    case Op::RelabelVertex: m = relabel_vertex(d, rng); break;
    default: break;
  }
  if (!m) return {};
  return {true, !hwp::verify_decomposition(*m, target).pass};
}

}  // namespace mutation
