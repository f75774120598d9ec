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

#include "hwp/layered_digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hwp/error.hpp"

namespace hwp {

LayeredDigraph::LayeredDigraph(std::size_t layers, std::size_t labels)
    : labels_(labels), gaps_(layers) {
  if (layers < 3) {
    throw Error(ErrorKind::Domain, "a layered digraph needs at least 3 layers, got " +
                                       std::to_string(layers));
  }
  if (labels == 0) throw Error(ErrorKind::Domain, "a layered digraph needs at least one label");
}

LayeredDigraph LayeredDigraph::from_maps(std::size_t labels,
                                         const std::vector<std::vector<std::uint32_t>>& maps) {
  LayeredDigraph g(maps.size(), labels);
  for (std::size_t t = 0; t < maps.size(); ++t) {
    if (maps[t].size() != labels) {
      throw Error(ErrorKind::Domain, "gap map " + std::to_string(t) + " has wrong size");
    }
    std::vector<Arc> arcs;
    arcs.reserve(labels);
    for (std::uint32_t y = 0; y < labels; ++y) arcs.push_back({y, maps[t][y]});
    g.set_gap(t, std::move(arcs));
  }
  return g;
}

void LayeredDigraph::set_gap(std::size_t t, std::vector<Arc> arcs) {
  if (t >= gaps_.size()) throw Error(ErrorKind::Domain, "gap index out of range");
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].src >= labels_ || arcs[i].dst >= labels_) {
      throw Error(ErrorKind::Domain, "arc label out of range in gap " + std::to_string(t));
    }
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      throw Error(ErrorKind::Domain, "duplicate arc (" + std::to_string(arcs[i].src) + "," +
                                         std::to_string(arcs[i].dst) + ") in gap " +
                                         std::to_string(t));
    }
  }
  gaps_[t] = std::move(arcs);
}

std::size_t LayeredDigraph::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& gap : gaps_) total += gap.size();
  return total;
}

bool LayeredDigraph::contains(std::size_t t, Arc arc) const {
  const auto& gap = gaps_.at(t);
  return std::binary_search(gap.begin(), gap.end(), arc);
}

LayeredDigraph complete_cyclic(std::size_t labels, std::size_t layers) {
  LayeredDigraph g(layers, labels);
  std::vector<Arc> arcs;
  arcs.reserve(labels * labels);
  for (std::uint32_t s = 0; s < labels; ++s) {
    for (std::uint32_t d = 0; d < labels; ++d) arcs.push_back({s, d});
  }
  for (std::size_t t = 0; t < layers; ++t) g.set_gap(t, arcs);
  return g;
}

LayeredDigraph f_gap(const LayeredDigraph& g, std::size_t h) {
  if (h < 1 || h > g.layers()) {
    throw Error(ErrorKind::Domain, "gap selector h=" + std::to_string(h) + " outside [1, " +
                                       std::to_string(g.layers()) + "]");
  }
  LayeredDigraph out(g.layers(), g.labels());
  const auto arcs = g.gap(h - 1);
  out.set_gap(h - 1, {arcs.begin(), arcs.end()});
  return out;
}

LayeredDigraph with_last_gap_of(const LayeredDigraph& g, const LayeredDigraph& last) {
  if (g.layers() != last.layers() || g.labels() != last.labels()) {
    throw Error(ErrorKind::Domain, "closing-gap replacement between incompatible graphs");
  }
  LayeredDigraph out = g;
  const std::size_t t = g.layers() - 1;
  const auto arcs = last.gap(t);
  out.set_gap(t, {arcs.begin(), arcs.end()});
  return out;
}

namespace {

// Operation applied on gap i of T(alpha).
enum class RingStep { Minus, Plus, F };

RingStep ring_step(std::size_t gap, std::size_t layers) {
  if (layers == 3) return RingStep::F;
  const std::size_t threshold = layers % 2 == 1 ? layers - 3 : layers - 6;
  if (gap >= threshold) return RingStep::F;
  return gap % 2 == 0 ? RingStep::Minus : RingStep::Plus;
}

}  // namespace

LayeredDigraph t4k_build(const RingElement& alpha, std::size_t layers) {
  if (layers < 3 || layers == 4) {
    throw Error(ErrorKind::Unsupported,
                "ring builder supports n = 3 or n >= 5, got n = " + std::to_string(layers));
  }
  const unsigned k = alpha.k();
  const auto size = static_cast<std::uint32_t>(ring_size(k));
  std::vector<std::vector<std::uint32_t>> maps(layers, std::vector<std::uint32_t>(size));
  for (std::size_t t = 0; t < layers; ++t) {
    const RingStep step = ring_step(t, layers);
    for (std::uint32_t idx = 0; idx < size; ++idx) {
      const RingElement y = RingElement::from_flat(idx, k);
      RingElement image;
      switch (step) {
        case RingStep::Minus: image = y - alpha; break;
        case RingStep::Plus: image = y + alpha; break;
        case RingStep::F: image = f_alpha(alpha, y); break;
      }
      maps[t][idx] = image.flat();
    }
  }
  return LayeredDigraph::from_maps(size, maps);
}

LayeredDigraph h4k_build(const RingElement& alpha, const RingElement& beta, std::size_t layers) {
  if (alpha.k() != beta.k()) {
    throw Error(ErrorKind::Domain, "alpha and beta live in rings with different exponents");
  }
  return with_last_gap_of(t4k_build(alpha, layers), t4k_build(beta, layers));
}

namespace {

// Units mod x, powers of two first (in order of appearance), then the rest ascending.
std::vector<std::uint32_t> preferred_units(std::uint32_t x) {
  std::vector<std::uint32_t> out;
  std::vector<bool> seen(x, false);
  std::uint32_t p = 1 % x;
  while (!seen[p]) {
    seen[p] = true;
    out.push_back(p);
    p = static_cast<std::uint32_t>((std::uint64_t{p} * 2) % x);
  }
  for (std::uint32_t u = 1; u < x; ++u) {
    if (!seen[u] && std::gcd(u, x) == 1) out.push_back(u);
  }
  return out;
}

bool fill_multipliers(std::uint32_t x, const std::vector<std::uint32_t>& units, std::size_t slots,
                      std::uint32_t target, std::vector<std::uint32_t>& out) {
  if (slots == 1) {
    if (std::gcd(target, x) != 1) return false;
    out.push_back(target);
    return true;
  }
  for (const std::uint32_t u : units) {
    out.push_back(u);
    if (fill_multipliers(x, units, slots - 1, (target + x - u) % x, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

UnitMultiplierVector choose_multipliers(std::uint32_t x, std::size_t layers) {
  if (x == 0 || x % 2 == 0) {
    throw Error(ErrorKind::Domain, "multiplier modulus must be odd, got " + std::to_string(x));
  }
  if (layers < 3) throw Error(ErrorKind::Domain, "multiplier vector needs n >= 3");
  UnitMultiplierVector u{x, {}};
  if (x == 1) {
    u.entries.assign(layers, 0);
    return u;
  }
  // The first n-1 entries must sum to 1 so that adding the closing -1 gives 0.
  const auto units = preferred_units(x);
  if (!fill_multipliers(x, units, layers - 1, 1, u.entries)) {
    // Unreachable for odd x: (1, ..., 1, 2 - (n-2)) or (2, x-1) patterns always exist.
    throw Error(ErrorKind::SearchExhausted, "no unit multiplier vector found");
  }
  u.entries.push_back(x - 1);
  return u;
}

bool is_valid(const UnitMultiplierVector& u) {
  const std::uint32_t x = u.modulus;
  if (x == 0 || x % 2 == 0 || u.entries.size() < 3) return false;
  std::uint64_t sum = 0;
  for (const std::uint32_t e : u.entries) {
    if (e >= x || std::gcd(e, x) != 1) return false;
    sum += e;
  }
  return u.entries.back() == (x - 1) % x && sum % x == 0;
}

LayeredDigraph tx_build(std::uint32_t x, std::uint32_t i, std::size_t layers,
                        const UnitMultiplierVector& u) {
  if (!is_valid(u) || u.modulus != x || u.entries.size() != layers) {
    throw Error(ErrorKind::Domain, "invalid multiplier vector for x=" + std::to_string(x) +
                                       ", n=" + std::to_string(layers));
  }
  std::vector<std::vector<std::uint32_t>> maps(layers, std::vector<std::uint32_t>(x));
  for (std::size_t t = 0; t < layers; ++t) {
    const std::uint64_t shift = (std::uint64_t{u.entries[t]} * (i % x)) % x;
    for (std::uint32_t y = 0; y < x; ++y) maps[t][y] = static_cast<std::uint32_t>((y + shift) % x);
  }
  return LayeredDigraph::from_maps(x, maps);
}

LayeredDigraph hx_build(std::uint32_t x, std::uint32_t i, std::uint32_t s, std::size_t layers,
                        const UnitMultiplierVector& u) {
  return with_last_gap_of(tx_build(x, i, layers, u), tx_build(x, s, layers, u));
}

LayeredDigraph partite_product(const LayeredDigraph& g, const LayeredDigraph& h) {
  if (g.layers() != h.layers()) {
    throw Error(ErrorKind::Domain, "partite product of graphs with " + std::to_string(g.layers()) +
                                       " and " + std::to_string(h.layers()) + " layers");
  }
  const auto qh = static_cast<std::uint32_t>(h.labels());
  LayeredDigraph out(g.layers(), g.labels() * h.labels());
  for (std::size_t t = 0; t < g.layers(); ++t) {
    std::vector<Arc> arcs;
    arcs.reserve(g.gap(t).size() * h.gap(t).size());
    for (const Arc& ga : g.gap(t)) {
      for (const Arc& ha : h.gap(t)) {
        arcs.push_back({ga.src * qh + ha.src, ga.dst * qh + ha.dst});
      }
    }
    out.set_gap(t, std::move(arcs));
  }
  return out;
}

LayeredDigraph oplus(std::span<const LayeredDigraph> graphs) {
  if (graphs.empty()) throw Error(ErrorKind::Domain, "oplus of an empty list");
  const std::size_t n = graphs.front().layers();
  const std::size_t q = graphs.front().labels();
  LayeredDigraph out(n, q);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Arc> arcs;
    for (const auto& g : graphs) {
      if (g.layers() != n || g.labels() != q) {
        throw Error(ErrorKind::Domain, "oplus of graphs with different shapes");
      }
      arcs.insert(arcs.end(), g.gap(t).begin(), g.gap(t).end());
    }
    std::sort(arcs.begin(), arcs.end());
    const auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end()) {
      throw Error(ErrorKind::Overlap, "arc (" + std::to_string(t) + ":" + std::to_string(dup->src) +
                                          " -> " + std::to_string((t + 1) % n) + ":" +
                                          std::to_string(dup->dst) + ") appears twice");
    }
    out.set_gap(t, std::move(arcs));
  }
  return out;
}

CycleFactor cycles_of(const LayeredDigraph& g) {
  const std::size_t n = g.layers();
  const std::size_t q = g.labels();
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> next(n * q, kNone);
  std::vector<std::uint32_t> indegree(n * q, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t nt = (t + 1) % n;
    for (const Arc& a : g.gap(t)) {
      const std::size_t from = t * q + a.src;
      if (next[from] != kNone) {
        throw Error(ErrorKind::NotAFactor, "vertex (" + std::to_string(t) + "," +
                                               std::to_string(a.src) + ") has out-degree > 1");
      }
      next[from] = static_cast<std::uint32_t>(nt * q + a.dst);
      ++indegree[nt * q + a.dst];
    }
  }
  for (std::size_t v = 0; v < n * q; ++v) {
    if (next[v] == kNone || indegree[v] != 1) {
      throw Error(ErrorKind::NotAFactor,
                  "vertex (" + std::to_string(v / q) + "," + std::to_string(v % q) + ") has " +
                      (next[v] == kNone ? std::string("out-degree 0")
                                        : "in-degree " + std::to_string(indegree[v])));
    }
  }
  CycleFactor factor;
  std::vector<bool> visited(n * q, false);
  // Scanning ids in increasing order starts every cycle at its least vertex.
  for (std::uint32_t start = 0; start < n * q; ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    for (std::uint32_t v = start; !visited[v]; v = next[v]) {
      visited[v] = true;
      cycle.push_back(v);
    }
    factor.cycles.push_back(std::move(cycle));
  }
  std::sort(factor.cycles.begin(), factor.cycles.end());
  const std::size_t len = factor.cycles.front().size();
  const bool uniform = std::all_of(factor.cycles.begin(), factor.cycles.end(),
                                   [len](const Cycle& c) { return c.size() == len; });
  factor.cycle_length = uniform ? len : 0;
  return factor;
}

std::string to_dot(const LayeredDigraph& g,
                   const std::function<std::string(std::uint32_t)>& label_name) {
  const std::size_t n = g.layers();
  const std::size_t q = g.labels();
  const auto name = [&](std::uint32_t label) {
    return label_name ? label_name(label) : std::to_string(label);
  };
  std::ostringstream os;
  os << "digraph layered {\n  rankdir=LR;\n";
  for (std::size_t t = 0; t < n; ++t) {
    os << "  { rank=same;";
    for (std::uint32_t y = 0; y < q; ++y) os << " v" << t * q + y << ";";
    os << " }\n";
    for (std::uint32_t y = 0; y < q; ++y) {
      os << "  v" << t * q + y << " [label=\"" << t << ":" << name(y) << "\"];\n";
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (const Arc& a : g.gap(t)) {
      os << "  v" << t * q + a.src << " -> v" << ((t + 1) % n) * q + a.dst << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hwp
