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

#include "hwp/verifier.hpp"

#include <algorithm>
#include <type_traits>

namespace hwp {

namespace {

constexpr std::size_t kWitnessesPerCheck = 8;

std::string edge_text(const Edge& e, bool directed) {
  return (directed ? "(" : "{") + std::to_string(e.u) + (directed ? "->" : ",") +
         std::to_string(e.v) + (directed ? ")" : "}");
}

class Checker {
 public:
  Checker(std::size_t order, const Target& target) : order_(order), target_(target) {
    directed_ = std::holds_alternative<CyclicMultipartiteTarget>(target);
  }

  VerificationReport run(std::span<const EdgeFactor> factors,
                         const std::optional<std::vector<Edge>>& one_factor) {
    check_order();
    if (!report_.pass) return std::move(report_);
    for (std::size_t f = 0; f < factors.size(); ++f) check_factor(f, factors[f]);
    check_matching(one_factor);
    check_partition(factors, one_factor);
    return std::move(report_);
  }

 private:
  void fail(ViolationKind kind, std::string witness) {
    report_.pass = false;
    report_.violations.push_back({kind, std::move(witness)});
  }

  void check_order() {
    std::visit(
        [this](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, EquipartiteTarget>) {
            if (t.part_size * t.parts != order_)
              fail(ViolationKind::Shape, "order " + std::to_string(order_) + " != h*u");
          } else if constexpr (std::is_same_v<T, CyclicMultipartiteTarget>) {
            if (t.labels * t.layers != order_ || t.layers < 3)
              fail(ViolationKind::Shape, "order " + std::to_string(order_) + " != q*n");
          } else if constexpr (std::is_same_v<T, CompleteMinusMatchingTarget>) {
            if (order_ % 2 != 0)
              fail(ViolationKind::Shape, "complete-minus-matching target with odd order");
          }
        },
        target_);
  }

  bool in_target(const Edge& e) const {
    if (e.u >= order_ || e.v >= order_ || e.u == e.v) return false;
    return std::visit(
        [&e](const auto& t) -> bool {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, EquipartiteTarget>) {
            return e.u / t.part_size != e.v / t.part_size;
          } else if constexpr (std::is_same_v<T, CyclicMultipartiteTarget>) {
            return (e.u / t.labels + 1) % t.layers == e.v / t.labels;
          } else {
            return true;
          }
        },
        target_);
  }

  std::size_t target_edge_count() const {
    return std::visit(
        [this](const auto& t) -> std::size_t {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, EquipartiteTarget>) {
            return t.parts * (t.parts - 1) / 2 * t.part_size * t.part_size;
          } else if constexpr (std::is_same_v<T, CyclicMultipartiteTarget>) {
            return t.layers * t.labels * t.labels;
          } else {
            return order_ * (order_ - 1) / 2;
          }
        },
        target_);
  }

  Edge canonical(const Edge& e) const {
    return directed_ ? e : Edge{std::min(e.u, e.v), std::max(e.u, e.v)};
  }

  void check_factor(std::size_t index, const EdgeFactor& factor) {
    const std::string name = "factor " + std::to_string(index);
    if (factor.cycle_length < 3) {
      fail(ViolationKind::Shape, name + " declares cycle length " +
                                     std::to_string(factor.cycle_length));
    }
    std::vector<std::size_t> out_deg(order_, 0), in_deg(order_, 0);
    std::vector<std::vector<VertexId>> adj(order_);
    std::size_t witnesses = 0;
    for (const Edge& e : factor.edges) {
      if (e.u >= order_ || e.v >= order_ || e.u == e.v) {
        if (witnesses++ < kWitnessesPerCheck)
          fail(ViolationKind::Shape, name + " uses " + edge_text(e, directed_) +
                                         (e.u == e.v ? ", a loop" : ", outside the vertex range"));
        if (e.u == e.v && e.u < order_) out_deg[e.u] += 2;
        continue;
      }
      if (!in_target(e)) {
        if (witnesses++ < kWitnessesPerCheck)
          fail(ViolationKind::ForeignEdge, name + " uses " + edge_text(e, directed_) +
                                               ", which is not an edge of the target");
      }
      ++out_deg[e.u];
      ++in_deg[e.v];
      adj[e.u].push_back(e.v);
      if (!directed_) adj[e.v].push_back(e.u);
    }
    bool regular = true;
    witnesses = 0;
    for (VertexId v = 0; v < order_; ++v) {
      const bool ok = directed_ ? (out_deg[v] == 1 && in_deg[v] == 1)
                                : (out_deg[v] + in_deg[v] == 2);
      if (ok) continue;
      regular = false;
      if (witnesses++ < kWitnessesPerCheck) {
        fail(ViolationKind::Degree,
             name + ": vertex " + std::to_string(v) +
                 (directed_ ? " has out-degree " + std::to_string(out_deg[v]) + " and in-degree " +
                                  std::to_string(in_deg[v])
                            : " has degree " + std::to_string(out_deg[v] + in_deg[v])));
      }
    }
    if (!regular || factor.cycle_length < 3) return;
    // Walk each component; 2-regularity makes every component a closed walk.
    std::vector<bool> seen(order_, false);
    witnesses = 0;
    for (VertexId start = 0; start < order_; ++start) {
      if (seen[start]) continue;
      std::size_t length = 0;
      std::optional<VertexId> prev;
      VertexId cur = start;
      do {
        seen[cur] = true;
        ++length;
        const VertexId next =
            (directed_ || !prev || adj[cur][0] != *prev) ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
      } while (cur != start && length <= order_);
      if (length != factor.cycle_length && witnesses++ < kWitnessesPerCheck) {
        fail(ViolationKind::CycleLength, name + ": cycle through vertex " + std::to_string(start) +
                                             " has length " + std::to_string(length) +
                                             ", declared " +
                                             std::to_string(factor.cycle_length));
      }
    }
  }

  void check_matching(const std::optional<std::vector<Edge>>& one_factor) {
    const bool required = std::holds_alternative<CompleteMinusMatchingTarget>(target_);
    if (!one_factor) {
      if (required) fail(ViolationKind::Matching, "one-factor missing for an even complete graph");
      return;
    }
    if (directed_ && !one_factor->empty()) {
      fail(ViolationKind::Matching, "one-factor not allowed for a directed target");
      return;
    }
    std::vector<std::size_t> hits(order_, 0);
    for (const Edge& e : *one_factor) {
      if (e.u >= order_ || e.v >= order_ || e.u == e.v) {
        fail(ViolationKind::Matching, "one-factor edge " + edge_text(e, false) + " is malformed");
        return;
      }
      ++hits[e.u];
      ++hits[e.v];
    }
    const bool empty_ok = one_factor->empty() && !required;
    if (empty_ok) return;
    std::size_t witnesses = 0;
    for (VertexId v = 0; v < order_; ++v) {
      if (hits[v] != 1 && witnesses++ < kWitnessesPerCheck) {
        fail(ViolationKind::Matching, "one-factor covers vertex " + std::to_string(v) + " " +
                                          std::to_string(hits[v]) + " times");
      }
    }
  }

  void check_partition(std::span<const EdgeFactor> factors,
                       const std::optional<std::vector<Edge>>& one_factor) {
    std::vector<Edge> all;
    for (const auto& f : factors) {
      for (const Edge& e : f.edges) all.push_back(canonical(e));
    }
    if (one_factor) {
      for (const Edge& e : *one_factor) all.push_back(canonical(e));
    }
    std::sort(all.begin(), all.end());
    std::size_t witnesses = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (all[i] == all[i - 1] && (i < 2 || all[i - 1] != all[i - 2])) {
        if (witnesses++ < kWitnessesPerCheck)
          fail(ViolationKind::DuplicateEdge,
               edge_text(all[i], directed_) + " is covered more than once");
      }
    }
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::erase_if(all, [this](const Edge& e) { return !in_target(e); });
    const std::size_t expected = target_edge_count();
    if (all.size() == expected) return;
    // Locate a witness by scanning target edges in order.
    witnesses = 0;
    const auto present = [&all](const Edge& e) {
      return std::binary_search(all.begin(), all.end(), e);
    };
    for (VertexId u = 0; u < order_ && witnesses < kWitnessesPerCheck; ++u) {
      for (VertexId v = directed_ ? 0 : u + 1; v < order_ && witnesses < kWitnessesPerCheck; ++v) {
        const Edge e{u, v};
        if (in_target(e) && !present(e)) {
          ++witnesses;
          fail(ViolationKind::MissingEdge, edge_text(e, directed_) + " is never covered");
        }
      }
    }
  }

  std::size_t order_;
  const Target& target_;
  bool directed_ = false;
  VerificationReport report_;
};

}  // namespace

Target complete_target_for(std::size_t order) {
  if (order % 2 == 0) return CompleteMinusMatchingTarget{};
  return CompleteTarget{};
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::Shape: return "shape";
    case ViolationKind::Degree: return "degree";
    case ViolationKind::CycleLength: return "cycle-length";
    case ViolationKind::ForeignEdge: return "foreign-edge";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::MissingEdge: return "missing-edge";
    case ViolationKind::Matching: return "matching";
  }
  return "?";
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::vector<EdgeFactor> edge_factors(const Decomposition& d) {
  std::vector<EdgeFactor> out;
  out.reserve(d.factors.size());
  for (const auto& f : d.factors) {
    EdgeFactor ef{f.cycle_length, {}};
    for (const Cycle& c : f.cycles) {
      for (std::size_t t = 0; t < c.size(); ++t) ef.edges.push_back({c[t], c[(t + 1) % c.size()]});
    }
    out.push_back(std::move(ef));
  }
  return out;
}

VerificationReport verify_edge_factors(std::size_t order, std::span<const EdgeFactor> factors,
                                       const std::optional<std::vector<Edge>>& one_factor,
                                       const Target& target) {
  return Checker(order, target).run(factors, one_factor);
}

VerificationReport verify_decomposition(const Decomposition& d, const Target& target) {
  VerificationReport early;
  for (std::size_t f = 0; f < d.factors.size(); ++f) {
    for (const Cycle& c : d.factors[f].cycles) {
      if (c.size() < 3) {
        early.pass = false;
        early.violations.push_back({ViolationKind::Shape, "factor " + std::to_string(f) +
                                                              " lists a cycle with " +
                                                              std::to_string(c.size()) +
                                                              " vertices"});
      }
    }
  }
  const auto factors = edge_factors(d);
  VerificationReport report = verify_edge_factors(d.order, factors, d.one_factor, target);
  if (!early.pass) {
    report.pass = false;
    report.violations.insert(report.violations.begin(), early.violations.begin(),
                             early.violations.end());
  }
  return report;
}

Spectrum spectrum(const Decomposition& d) {
  Spectrum s;
  for (const auto& f : d.factors) {
    if (f.cycles.empty()) {
      ++s.mixed;
      continue;
    }
    const std::size_t len = f.cycles.front().size();
    const bool uniform = std::all_of(f.cycles.begin(), f.cycles.end(),
                                     [len](const Cycle& c) { return c.size() == len; });
    if (uniform) {
      ++s.counts[len];
    } else {
      ++s.mixed;
    }
  }
  return s;
}

}  // namespace hwp
