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

#include "hwp/ingredients.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <numeric>

#include "design_search.hpp"
#include "hwp/equipartite_decomposer.hpp"
#include "hwp/error.hpp"
#include "hwp/io.hpp"
#include "hwp/layered_digraph.hpp"
#include "hwp/verifier.hpp"

namespace hwp {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

Feasibility feasible_equipartite(std::size_t h, std::size_t u, std::size_t z) {
  if (z < 3) return {false, "z >= 3"};
  if (u < 2) return {false, "u >= 2"};
  if (h < 1) return {false, "h >= 1"};
  if ((h * u) % z != 0) return {false, "hu is divisible by z"};
  if ((h * (u - 1)) % 2 != 0) return {false, "h(u-1) is even"};
  if (u == 2 && z % 2 != 0) return {false, "z is even if u = 2"};
  static constexpr std::size_t kExceptions[4][3] = {{2, 3, 3}, {6, 3, 3}, {2, 6, 3}, {6, 2, 6}};
  for (const auto& e : kExceptions) {
    if (h == e[0] && u == e[1] && z == e[2]) {
      return {false, "(h,u,z) != " + triple(e[0], e[1], e[2])};
    }
  }
  return {true, "hu divisible by z, h(u-1) even, not an exception"};
}

Feasibility feasible_complete(std::size_t v, std::size_t n) {
  if (n < 3 || v < 3) return {false, "v, n >= 3"};
  if (v % n != 0) return {false, "v = 0 (mod n)"};
  if (v == 6 && n == 3) return {false, "(v,n) != (6,3)"};
  if (v == 12 && n == 3) return {false, "(v,n) != (12,3)"};
  return {true, "n divides v, not an exception"};
}

Decomposition EquipartiteDesign::decomposition() const { return {h * u, factors, std::nullopt}; }

Decomposition CompleteDesign::decomposition() const { return {v, factors, one_factor}; }

const char* to_string(DesignSource source) noexcept {
  switch (source) {
    case DesignSource::Registry: return "registry";
    case DesignSource::Direct: return "direct";
    case DesignSource::Rotational: return "rotational";
    case DesignSource::Backtracking: return "backtracking";
  }
  return "?";
}

std::optional<std::string> IngredientConfig::registry_dir() const {
  if (registry && !registry->empty()) return registry;
  if (const char* env = std::getenv("HWP_REGISTRY"); env && *env) return std::string(env);
  return std::nullopt;
}

// ---------------------------------------------------------------- registry

RegistryKey RegistryKey::equipartite(std::size_t h, std::size_t u, std::size_t z) {
  return {"equipartite", {{"h", h}, {"u", u}, {"z", z}}};
}

RegistryKey RegistryKey::complete(std::size_t v, std::size_t n) {
  return {"complete", {{"v", v}, {"n", n}}};
}

std::string RegistryKey::file_name() const {
  std::string name = kind;
  for (const auto& [k, v] : params) name += "-" + k + std::to_string(v);
  return name + ".json";
}

namespace {

std::size_t key_param(const RegistryKey& key, const char* name) {
  for (const auto& [k, v] : key.params) {
    if (k == name) return v;
  }
  throw Error(ErrorKind::Domain, "registry key lacks parameter " + std::string(name));
}

// Full check against the graph the key names, plus factor count and length.
void check_design(const RegistryKey& key, const Decomposition& d) {
  std::size_t order = 0, length = 0, count = 0;
  Target target = CompleteTarget{};
  if (key.kind == "equipartite") {
    const std::size_t h = key_param(key, "h"), u = key_param(key, "u");
    order = h * u;
    length = key_param(key, "z");
    count = h * (u - 1) / 2;
    target = EquipartiteTarget{h, u};
  } else if (key.kind == "complete") {
    order = key_param(key, "v");
    length = key_param(key, "n");
    count = (order - 1) / 2;
    target = complete_target_for(order);
  } else {
    throw Error(ErrorKind::Domain, "unknown registry kind " + key.kind);
  }
  const std::string what = key.file_name();
  if (d.order != order) throw Error(ErrorKind::Verification, what + ": wrong order");
  if (d.factors.size() != count) throw Error(ErrorKind::Verification, what + ": wrong factor count");
  for (const CycleFactor& f : d.factors) {
    if (f.cycle_length != length) {
      throw Error(ErrorKind::Verification, what + ": factor of cycle length " +
                                               std::to_string(f.cycle_length));
    }
  }
  const VerificationReport report = verify_decomposition(d, target);
  if (!report.pass) {
    const Violation& v = report.violations.front();
    throw Error(ErrorKind::Verification,
                what + ": " + to_string(v.kind) + ": " + v.witness);
  }
}

}  // namespace

void registry_store(const std::string& dir, const RegistryKey& key, const Decomposition& design) {
  check_design(key, design);
  DecompositionFile file;
  file.kind = key.kind;
  for (const auto& [k, v] : key.params) file.params[k] = v;
  file.decomposition = design;
  write_file_atomic((std::filesystem::path(dir) / key.file_name()).string(), to_json_text(file));
}

Decomposition registry_load(const std::string& dir, const RegistryKey& key) {
  const auto path = std::filesystem::path(dir) / key.file_name();
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::NotFound, "no registry entry " + path.string());
  }
  DecompositionFile file = parse_decomposition(read_file(path.string()));
  if (file.kind != key.kind) throw Error(ErrorKind::Corrupt, path.string() + ": kind mismatch");
  for (const auto& [k, v] : key.params) {
    if (!file.params.contains(k) || file.params[k] != v) {
      throw Error(ErrorKind::Corrupt, path.string() + ": params mismatch on " + k);
    }
  }
  check_design(key, file.decomposition);
  return file.decomposition;
}

void registry_store(const std::string& dir, const EquipartiteDesign& d) {
  registry_store(dir, RegistryKey::equipartite(d.h, d.u, d.z), d.decomposition());
}

void registry_store(const std::string& dir, const CompleteDesign& d) {
  registry_store(dir, RegistryKey::complete(d.v, d.n), d.decomposition());
}

// ------------------------------------------------------ direct constructions

namespace {

// Zig-zag i, i+1, i-1, i+2, ... through all of Z_modulus.
std::vector<VertexId> zigzag(std::size_t modulus, std::size_t i) {
  std::vector<VertexId> path;
  const auto at = [&](long long offset) {
    const long long m = static_cast<long long>(modulus);
    return static_cast<VertexId>(((static_cast<long long>(i) + offset) % m + m) % m);
  };
  path.push_back(at(0));
  for (long long d = 1; path.size() < modulus; ++d) {
    path.push_back(at(d));
    if (path.size() < modulus) path.push_back(at(-d));
  }
  return path;
}

CycleFactor single_cycle(Cycle c) {
  const std::size_t n = c.size();
  return {n, {canonical_undirected(std::move(c))}};
}

}  // namespace

CompleteDesign walecki(std::size_t v) {
  if (v < 3) throw Error(ErrorKind::Domain, "walecki needs v >= 3");
  CompleteDesign d;
  d.v = v;
  d.n = v;
  if (v % 2 == 1) {
    const std::size_t m = v - 1;
    const auto inf = static_cast<VertexId>(m);
    for (std::size_t i = 0; i < m / 2; ++i) {
      Cycle c = zigzag(m, i);
      c.push_back(inf);
      d.factors.push_back(single_cycle(std::move(c)));
    }
    return d;
  }
  if (v < 4) throw Error(ErrorKind::Domain, "walecki needs v >= 4 when v is even");
  const std::size_t m = v - 2;
  const auto inf1 = static_cast<VertexId>(m), inf2 = static_cast<VertexId>(m + 1);
  std::vector<Edge> matching;
  for (std::size_t i = 0; i < m / 2; ++i) {
    const std::vector<VertexId> p = zigzag(m, i);
    // The middle edge of the zig-zag is a diameter; route it through inf2.
    const std::size_t mid = m / 2 - 1;
    Cycle c(p.begin(), p.begin() + static_cast<long>(mid) + 1);
    c.push_back(inf2);
    c.insert(c.end(), p.begin() + static_cast<long>(mid) + 1, p.end());
    c.push_back(inf1);
    matching.push_back({std::min(p[mid], p[mid + 1]), std::max(p[mid], p[mid + 1])});
    d.factors.push_back(single_cycle(std::move(c)));
  }
  matching.push_back({inf1, inf2});
  std::sort(matching.begin(), matching.end());
  d.one_factor = std::move(matching);
  return d;
}

namespace {

// z = u, u and h odd: lift each Hamilton cycle of K_u by the h translates of a
// unit difference pattern summing to zero.
EquipartiteDesign lift_hamiltonian(std::size_t h, std::size_t u) {
  EquipartiteDesign d{h, u, u, {}};
  const CompleteDesign base = walecki(u);
  const UnitMultiplierVector mult = choose_multipliers(static_cast<std::uint32_t>(h), u);
  for (const CycleFactor& f : base.factors) {
    const Cycle& ham = f.cycles.front();
    for (std::size_t i = 0; i < h; ++i) {
      CycleFactor out{u, {}};
      for (std::size_t w = 0; w < h; ++w) {
        Cycle c;
        std::size_t offset = w;
        for (std::size_t t = 0; t < u; ++t) {
          c.push_back(static_cast<VertexId>(ham[t] * h + offset));
          offset = (offset + mult.entries[t] * i) % h;
        }
        out.cycles.push_back(canonical_undirected(std::move(c)));
      }
      std::sort(out.cycles.begin(), out.cycles.end());
      d.factors.push_back(std::move(out));
    }
  }
  return d;
}


using Adjacency = std::vector<std::vector<char>>;

Adjacency equipartite_adjacency(std::size_t h, std::size_t u) {
  Adjacency adj(h * u, std::vector<char>(h * u, 0));
  for (std::size_t a = 0; a < h * u; ++a) {
    for (std::size_t b = 0; b < h * u; ++b) adj[a][b] = (a / h != b / h);
  }
  return adj;
}

Adjacency complete_adjacency(std::size_t v) {
  Adjacency adj(v, std::vector<char>(v, 1));
  for (std::size_t a = 0; a < v; ++a) adj[a][a] = 0;
  return adj;
}

std::optional<std::vector<CycleFactor>> plain_search(std::size_t z, std::size_t count,
                                                     const Adjacency& adj,
                                                     std::uint64_t& budget) {
  const std::size_t order = adj.size();
  detail::ClassProblem p = detail::make_problem(order, z, count);
  int next = 0;
  for (VertexId a = 0; a < order; ++a) {
    for (VertexId b = a + 1; b < order; ++b) {
      if (adj[a][b]) p.set_class(a, b, next++);
    }
  }
  p.class_count = static_cast<std::size_t>(next);
  p.anchor = true;
  return detail::search_base_factors(p, budget);
}

struct Orbits {
  std::vector<std::vector<Edge>> full;   // orbits of size equal to the period
  std::vector<Edge> short_edges;         // all edges on shorter orbits
};

Orbits edge_orbits(const Adjacency& adj, const std::vector<VertexId>& sigma, std::size_t period) {
  const std::size_t order = adj.size();
  std::vector<char> seen(order * order, 0);
  Orbits out;
  for (VertexId a = 0; a < order; ++a) {
    for (VertexId b = a + 1; b < order; ++b) {
      if (!adj[a][b] || seen[a * order + b]) continue;
      std::vector<Edge> orbit;
      VertexId p = a, q = b;
      do {
        const Edge e{std::min(p, q), std::max(p, q)};
        seen[e.u * order + e.v] = 1;
        orbit.push_back(e);
        p = sigma[p];
        q = sigma[q];
      } while (!(std::min(p, q) == a && std::max(p, q) == b));
      if (orbit.size() == period) {
        out.full.push_back(std::move(orbit));
      } else {
        out.short_edges.insert(out.short_edges.end(), orbit.begin(), orbit.end());
      }
    }
  }
  return out;
}

bool is_perfect_matching(std::size_t order, const std::vector<Edge>& edges) {
  std::vector<int> deg(order, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

struct RotationalResult {
  std::vector<CycleFactor> factors;
  std::optional<std::vector<Edge>> matching;
};

// Develops base factors under sigma. When want_matching, the matching is the
// short orbits plus at most one full orbit, tried in order.
std::optional<RotationalResult> rotational_search(std::size_t z, std::size_t factor_count,
                                                  const Adjacency& adj,
                                                  const std::vector<VertexId>& sigma,
                                                  std::size_t period, bool want_matching,
                                                  std::uint64_t& budget) {
  const std::size_t order = adj.size();
  if (period < 2 || factor_count % period != 0) return std::nullopt;
  const Orbits orbits = edge_orbits(adj, sigma, period);
  const std::size_t base = factor_count / period;
  if (!want_matching && !orbits.short_edges.empty()) return std::nullopt;

  std::vector<int> candidates;  // full orbit put into the matching, -1 for none
  if (want_matching) {
    if (is_perfect_matching(order, orbits.short_edges)) candidates.push_back(-1);
    for (std::size_t o = 0; o < orbits.full.size(); ++o) {
      std::vector<Edge> m = orbits.short_edges;
      m.insert(m.end(), orbits.full[o].begin(), orbits.full[o].end());
      if (is_perfect_matching(order, m)) candidates.push_back(static_cast<int>(o));
    }
  } else {
    candidates.push_back(-1);
  }
  for (int reserved : candidates) {
    detail::ClassProblem p = detail::make_problem(order, z, base);
    int next = 0;
    for (std::size_t o = 0; o < orbits.full.size(); ++o) {
      if (static_cast<int>(o) == reserved) continue;
      for (const Edge& e : orbits.full[o]) p.set_class(e.u, e.v, next);
      ++next;
    }
    p.class_count = static_cast<std::size_t>(next);
    if (p.class_count != base * order) continue;
    auto found = detail::search_base_factors(p, budget);
    if (!found) continue;
    RotationalResult result{detail::develop(*found, sigma, period), std::nullopt};
    if (want_matching) {
      std::vector<Edge> m = orbits.short_edges;
      if (reserved >= 0) m.insert(m.end(), orbits.full[reserved].begin(), orbits.full[reserved].end());
      std::sort(m.begin(), m.end());
      result.matching = std::move(m);
    }
    return result;
  }
  return std::nullopt;
}

// Z_g acting on two rows of g vertices, the remaining one or two points fixed.
std::vector<VertexId> two_row_rotation(std::size_t v, std::size_t g) {
  std::vector<VertexId> sigma(v);
  for (VertexId p = 0; p < v; ++p) {
    sigma[p] = p < 2 * g ? static_cast<VertexId>((p / g) * g + (p % g + 1) % g) : p;
  }
  return sigma;
}

void sort_factor_cycles(std::vector<CycleFactor>& factors) {
  for (CycleFactor& f : factors) {
    for (Cycle& c : f.cycles) c = canonical_undirected(std::move(c));
    std::sort(f.cycles.begin(), f.cycles.end());
  }
}

std::optional<Decomposition> try_registry(const IngredientConfig& config, const RegistryKey& key) {
  const auto dir = config.registry_dir();
  if (!dir) return std::nullopt;
  try {
    return registry_load(*dir, key);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound) return std::nullopt;
    throw;
  }
}

void set_source(DesignSource* out, DesignSource s) {
  if (out) *out = s;
}

}  // namespace

EquipartiteDesign build_equipartite(std::size_t h, std::size_t u, std::size_t z,
                                    const IngredientConfig& config, DesignSource* source) {
  const Feasibility feas = feasible_equipartite(h, u, z);
  if (!feas.ok) {
    throw Error(ErrorKind::Infeasible,
                "K_(" + std::to_string(h) + ":" + std::to_string(u) + ") has no resolvable C_" +
                    std::to_string(z) + "-factorization: " + feas.reason);
  }
  const RegistryKey key = RegistryKey::equipartite(h, u, z);
  EquipartiteDesign d{h, u, z, {}};
  if (auto hit = try_registry(config, key)) {
    d.factors = std::move(hit->factors);
    set_source(source, DesignSource::Registry);
    return d;
  }
  if (z == u && u % 2 == 1 && h % 2 == 1) {
    d = lift_hamiltonian(h, u);
    set_source(source, DesignSource::Direct);
  } else {
    if (h * u > config.equipartite_cap) {
      throw Error(ErrorKind::CapExceeded, "K_(" + std::to_string(h) + ":" + std::to_string(u) +
                                              ") exceeds the search cap of " +
                                              std::to_string(config.equipartite_cap) + " vertices");
    }
    const Adjacency adj = equipartite_adjacency(h, u);
    const std::size_t count = h * (u - 1) / 2;
    std::uint64_t budget = config.node_budget;
    std::optional<RotationalResult> rot;
    if (u % 2 == 1 && h > 1) {
      std::vector<VertexId> sigma(h * u);
      for (VertexId p = 0; p < h * u; ++p) sigma[p] = static_cast<VertexId>((p / h) * h + (p % h + 1) % h);
      rot = rotational_search(z, count, adj, sigma, h, false, budget);
    }
    if (rot) {
      d.factors = std::move(rot->factors);
      set_source(source, DesignSource::Rotational);
    } else {
      auto found = plain_search(z, count, adj, budget);
      if (!found) {
        throw Error(ErrorKind::SearchExhausted, "backtracking exhausted without a factorization");
      }
      d.factors = std::move(*found);
      set_source(source, DesignSource::Backtracking);
    }
  }
  sort_factor_cycles(d.factors);
  check_design(key, d.decomposition());
  return d;
}

CompleteDesign build_complete(std::size_t v, std::size_t n, const IngredientConfig& config,
                              DesignSource* source) {
  const Feasibility feas = feasible_complete(v, n);
  if (!feas.ok) {
    throw Error(ErrorKind::Infeasible, "K_" + std::to_string(v) + " has no C_" +
                                           std::to_string(n) + "-factorization: " + feas.reason);
  }
  const RegistryKey key = RegistryKey::complete(v, n);
  CompleteDesign d{v, n, {}, std::nullopt};
  if (auto hit = try_registry(config, key)) {
    d.factors = std::move(hit->factors);
    d.one_factor = std::move(hit->one_factor);
    set_source(source, DesignSource::Registry);
    return d;
  }
  if (n == v) {
    d = walecki(v);
    set_source(source, DesignSource::Direct);
  } else {
    if (v > config.complete_cap) {
      throw Error(ErrorKind::CapExceeded, "K_" + std::to_string(v) + " exceeds the search cap of " +
                                              std::to_string(config.complete_cap) + " vertices");
    }
    const std::size_t count = (v - 1) / 2;
    std::uint64_t budget = config.node_budget;
    const Adjacency full = complete_adjacency(v);
    const std::size_t g = v % 2 == 0 ? (v - 2) / 2 : (v - 1) / 2;
    std::optional<RotationalResult> rot =
        rotational_search(n, count, full, two_row_rotation(v, g), g, v % 2 == 0, budget);
    if (rot) {
      d.factors = std::move(rot->factors);
      d.one_factor = std::move(rot->matching);
      set_source(source, DesignSource::Rotational);
    } else {
      // Every perfect matching of K_v is equivalent, so fix {2i, 2i+1}.
      Adjacency adj = full;
      std::vector<Edge> matching;
      if (v % 2 == 0) {
        for (VertexId a = 0; a < v; a += 2) {
          adj[a][a + 1] = adj[a + 1][a] = 0;
          matching.push_back({a, a + 1});
        }
        d.one_factor = matching;
      }
      auto found = plain_search(n, count, adj, budget);
      if (!found) {
        throw Error(ErrorKind::SearchExhausted, "backtracking exhausted without a factorization");
      }
      d.factors = std::move(*found);
      set_source(source, DesignSource::Backtracking);
    }
  }
  sort_factor_cycles(d.factors);
  check_design(key, d.decomposition());
  return d;
}

}  // namespace hwp
