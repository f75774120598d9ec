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

#include "hwp/permutation_engine.hpp"

#include <algorithm>
#include <numeric>

#include "hwp/error.hpp"
#include "hwp/ring4k.hpp"

namespace hwp {

PermutationTable::PermutationTable(std::vector<std::uint32_t> image, std::size_t first_stride)
    : image_(std::move(image)), first_stride_(first_stride) {
  if (first_stride_ == 0) throw Error(ErrorKind::Domain, "first-coordinate stride must be >= 1");
  std::vector<bool> hit(image_.size(), false);
  for (const std::uint32_t v : image_) {
    if (v >= image_.size() || hit[v]) {
      throw Error(ErrorKind::Domain, "permutation table is not a bijection (image " +
                                         std::to_string(v) + ")");
    }
    hit[v] = true;
  }
  motion_.reserve(image_.size());
  for (std::size_t e = 0; e < image_.size(); ++e) {
    motion_.push_back(e / first_stride_ == image_[e] / first_stride_ ? Motion::FixedFirst
                                                                     : Motion::MovedFirst);
  }
}

std::size_t PermutationTable::fixed_first_count() const noexcept {
  return static_cast<std::size_t>(std::count(motion_.begin(), motion_.end(), Motion::FixedFirst));
}

PermutationTable rho_z4(std::size_t fixed) {
  switch (fixed) {
    case 4: return {{0, 1, 2, 3}, 1};
    case 2: return {{0, 1, 3, 2}, 1};
    case 1: return {{0, 2, 3, 1}, 1};
    case 0: return {{1, 2, 3, 0}, 1};
    default: break;
  }
  throw Error(ErrorKind::Infeasible, "no permutation of Z_4 has exactly " + std::to_string(fixed) +
                                         " fixed points");
}

PermutationTable phi_ring(unsigned k, std::span<const std::size_t> per_fiber) {
  if (per_fiber.size() != fiber_count(k)) {
    throw Error(ErrorKind::Domain, "expected " + std::to_string(fiber_count(k)) +
                                       " per-fiber counts, got " + std::to_string(per_fiber.size()));
  }
  std::vector<PermutationTable> rhos;
  rhos.reserve(per_fiber.size());
  for (const std::size_t c : per_fiber) rhos.push_back(rho_z4(c));
  std::vector<std::uint32_t> image(ring_size(k));
  for (const RingElement& alpha : ring_elements(k)) {
    ParityTriple t = pi(alpha);
    t.cls = rhos[fiber_index(alpha)][t.cls];
    image[alpha.flat()] = pi_inv(t, k).flat();
  }
  return {std::move(image), 1};
}

bool fiber_count_admissible(std::uint32_t x, std::uint32_t y, std::size_t fixed) {
  const std::size_t size = std::size_t{4} * x * y;
  if (fixed > size) return false;
  if (x == 1 && y == 1) return fixed != 3;
  return fixed != 1 && fixed != size - 1;
}

std::vector<std::size_t> split_fixed_count(unsigned k, std::uint32_t x, std::uint32_t y,
                                           std::size_t total) {
  const std::size_t fibers = fiber_count(k);
  const std::size_t size = std::size_t{4} * x * y;
  std::vector<std::size_t> values;
  for (std::size_t f = 0; f <= size; ++f) {
    if (fiber_count_admissible(x, y, f)) values.push_back(f);
  }
  // reach[c][s]: s is a sum of c admissible values.
  std::vector<std::vector<bool>> reach(fibers + 1, std::vector<bool>(fibers * size + 1, false));
  reach[0][0] = true;
  for (std::size_t c = 1; c <= fibers; ++c) {
    for (std::size_t s = 0; s <= fibers * size; ++s) {
      for (const std::size_t v : values) {
        if (v <= s && reach[c - 1][s - v]) {
          reach[c][s] = true;
          break;
        }
      }
    }
  }
  if (total > fibers * size || !reach[fibers][total]) {
    throw Error(ErrorKind::Infeasible, "fixed count " + std::to_string(total) +
                                           " cannot be split over " + std::to_string(fibers) +
                                           " fibers of size " + std::to_string(size));
  }
  std::vector<std::size_t> out;
  std::size_t remaining = total;
  for (std::size_t c = fibers; c >= 1; --c) {
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      if (*it <= remaining && reach[c - 1][remaining - *it]) {
        out.push_back(*it);
        remaining -= *it;
        break;
      }
    }
  }
  return out;
}

namespace {

std::uint32_t modular_gap(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
  return (a + mod - b) % mod;
}

bool coprime_difference(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
  return mod == 1 || std::gcd(modular_gap(a, b, mod), mod) == 1;
}

// Splits an ordered run into consecutive cycles of length 2, the last of
// length 3 when the run is odd, and writes successor pairs into `next`.
template <typename Emit>
void cycle_run(const std::vector<std::uint32_t>& run, Emit&& emit) {
  std::size_t pos = 0;
  while (pos < run.size()) {
    const std::size_t len = (run.size() - pos == 3) ? 3 : 2;
    for (std::size_t t = 0; t < len; ++t) emit(run[pos + t], run[pos + (t + 1) % len]);
    pos += len;
  }
}

bool reachable(std::size_t sum, std::size_t count, std::size_t low, std::size_t cap) {
  if (count == 0) return sum == 0;
  if (low == 0) return sum == 0 || (sum >= 2 && sum <= count * cap);
  return sum >= count * low && sum <= count * cap;
}

// Moved-element counts per j-layer, non-increasing, each 0 or in [2, cap],
// with the two smallest entries equal so that no slice keeps exactly one layer.
std::optional<std::vector<std::size_t>> column_move_counts(std::size_t y, std::size_t cap,
                                                           std::size_t moved) {
  if (y == 1) {
    if (moved == 1 || moved > cap) return std::nullopt;
    return std::vector<std::size_t>{moved};
  }
  for (std::size_t e = 0; e <= cap; ++e) {
    if (e == 1 || 2 * e > moved) continue;
    std::size_t rest = moved - 2 * e;
    if (!reachable(rest, y - 2, e, cap)) continue;
    std::vector<std::size_t> counts;
    for (std::size_t left = y - 2; left >= 1; --left) {
      std::size_t v = std::min(cap, rest);
      while (!reachable(rest - v, left - 1, e, cap) || (v == 1) || (e > 0 && v < e)) --v;
      counts.push_back(v);
      rest -= v;
    }
    counts.push_back(e);
    counts.push_back(e);
    std::sort(counts.rbegin(), counts.rend());
    return counts;
  }
  return std::nullopt;
}

std::optional<PermutationTable> lambda_constructive(std::uint32_t x, std::uint32_t y,
                                                    std::size_t fixed) {
  const std::uint32_t slices = 4 * x;
  const std::size_t size = std::size_t{slices} * y;
  const auto counts = column_move_counts(y, slices, size - fixed);
  if (!counts) return std::nullopt;
  // Slice c stands for (gamma, i) = (c mod 4, c mod x); consecutive slices
  // differ by 1 in both coordinates.
  const auto element = [x, y](std::uint32_t slice, std::uint32_t j) {
    return ((slice % 4) * x + slice % x) * y + j;
  };
  std::vector<std::uint32_t> image(size, UINT32_MAX);
  for (std::uint32_t j = 0; j < y; ++j) {
    std::vector<std::uint32_t> run;
    for (std::uint32_t c = slices - static_cast<std::uint32_t>((*counts)[j]); c < slices; ++c)
      run.push_back(c);
    cycle_run(run, [&](std::uint32_t from, std::uint32_t to) {
      image[element(from, j)] = element(to, j);
    });
  }
  for (std::uint32_t c = 0; c < slices; ++c) {
    std::vector<std::uint32_t> stays;
    for (std::uint32_t j = 0; j < y; ++j) {
      if (c + (*counts)[j] < slices) stays.push_back(j);
    }
    if (stays.size() == 1) {
      if (y != 1) return std::nullopt;
      image[element(c, 0)] = element(c, 0);
      continue;
    }
    cycle_run(stays, [&](std::uint32_t from, std::uint32_t to) {
      image[element(c, from)] = element(c, to);
    });
  }
  if (std::find(image.begin(), image.end(), UINT32_MAX) != image.end()) return std::nullopt;
  return PermutationTable(std::move(image), std::size_t{x} * y);
}

struct FiberSearch {
  std::uint32_t x, y;
  std::size_t fixed;
  std::size_t size;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> image;
  std::vector<bool> used;

  bool compatible(std::uint32_t e, std::uint32_t f) const {
    const std::uint32_t ge = e / (x * y), ie = (e / y) % x, je = e % y;
    const std::uint32_t gf = f / (x * y), i_f = (f / y) % x, jf = f % y;
    if (ge == gf) return ie == i_f && (y == 1 ? je == jf : coprime_difference(je, jf, y));
    return coprime_difference(ie, i_f, x) && je == jf;
  }

  bool run(std::uint32_t e, std::size_t stays) {
    if (++nodes > budget) return false;
    if (e == size) return stays == fixed;
    if (stays > fixed || stays + (size - e) < fixed) return false;
    for (std::uint32_t f = 0; f < size; ++f) {
      if (used[f] || !compatible(e, f)) continue;
      used[f] = true;
      image[e] = f;
      const bool stay = e / (x * y) == f / (x * y);
      if (run(e + 1, stays + (stay ? 1 : 0))) return true;
      used[f] = false;
      if (nodes > budget) return false;
    }
    return false;
  }
};

void require_odd(std::uint32_t v, const char* name) {
  if (v == 0 || v % 2 == 0) {
    throw Error(ErrorKind::Domain, std::string(name) + " must be odd, got " + std::to_string(v));
  }
}

}  // namespace

std::optional<PermutationTable> lambda_fiber_search(std::uint32_t x, std::uint32_t y,
                                                    std::size_t fixed, std::uint64_t node_budget) {
  require_odd(x, "x");
  require_odd(y, "y");
  const std::size_t size = std::size_t{4} * x * y;
  FiberSearch search{x, y, fixed, size, node_budget, 0, std::vector<std::uint32_t>(size, 0),
                     std::vector<bool>(size, false)};
  if (!search.run(0, 0)) return std::nullopt;
  return PermutationTable(std::move(search.image), std::size_t{x} * y);
}

PermutationTable lambda_fiber(std::uint32_t x, std::uint32_t y, std::size_t fixed) {
  require_odd(x, "x");
  require_odd(y, "y");
  if (!fiber_count_admissible(x, y, fixed)) {
    throw Error(ErrorKind::Infeasible, "fiber of size " + std::to_string(4 * x * y) +
                                           " cannot carry " + std::to_string(fixed) +
                                           " first-coordinate-fixed elements");
  }
  if (x == 1 && y == 1) return rho_z4(fixed);
  if (auto built = lambda_constructive(x, y, fixed)) {
    if (validate_fiber_conditions(*built, x, y).all_pass && built->fixed_first_count() == fixed)
      return *std::move(built);
  }
  if (auto found = lambda_fiber_search(x, y, fixed)) return *std::move(found);
  throw Error(ErrorKind::SearchExhausted, "no fiber permutation found for x=" + std::to_string(x) +
                                              ", y=" + std::to_string(y) +
                                              ", F=" + std::to_string(fixed));
}

PermutationTable phi_product(unsigned k, std::uint32_t x, std::uint32_t y,
                             std::span<const std::size_t> per_fiber) {
  require_odd(x, "x");
  require_odd(y, "y");
  if (per_fiber.size() != fiber_count(k)) {
    throw Error(ErrorKind::Domain, "expected " + std::to_string(fiber_count(k)) +
                                       " per-fiber counts, got " + std::to_string(per_fiber.size()));
  }
  std::vector<PermutationTable> lambdas;
  lambdas.reserve(per_fiber.size());
  for (const std::size_t f : per_fiber) lambdas.push_back(lambda_fiber(x, y, f));
  const std::uint32_t xy = x * y;
  std::vector<std::uint32_t> image(ring_size(k) * xy);
  for (const RingElement& alpha : ring_elements(k)) {
    const ParityTriple t = pi(alpha);
    const PermutationTable& lambda = lambdas[fiber_index(alpha)];
    for (std::uint32_t rest = 0; rest < xy; ++rest) {
      const std::uint32_t mapped = lambda[t.cls * xy + rest];
      const RingElement beta = pi_inv({t.adot, t.bdot, mapped / xy}, k);
      image[alpha.flat() * xy + rest] = beta.flat() * xy + mapped % xy;
    }
  }
  return {std::move(image), xy};
}

ConditionReport validate_conditions(const PermutationTable& t, unsigned k, std::uint32_t x,
                                    std::uint32_t y) {
  const std::uint32_t xy = x * y;
  if (t.size() != ring_size(k) * xy) {
    throw Error(ErrorKind::Domain, "permutation table size does not match (k, x, y)");
  }
  ConditionReport report;
  for (std::uint32_t e = 0; e < t.size(); ++e) {
    const std::uint32_t f = t[e];
    const RingElement alpha = RingElement::from_flat(e / xy, k);
    const RingElement beta = RingElement::from_flat(f / xy, k);
    const std::uint32_t ie = (e / y) % x, i_f = (f / y) % x, je = e % y, jf = f % y;
    ElementVerdict v{e, true, {}};
    if (alpha == beta) {
      ++report.fixed_count;
      if (ie != i_f) {
        v = {e, false, "first coordinate fixed but second coordinate moved"};
      } else if (y != 1 && std::gcd(modular_gap(je, jf, y), y) != 1) {
        v = {e, false, "first coordinate fixed but third-coordinate difference not coprime to y"};
      }
    } else if (difference_class(alpha, beta) != DifferenceClass::Adjacent) {
      v = {e, false, "first-coordinate difference outside {+-1, +-x, +-x+-1}"};
    } else if (x != 1 && std::gcd(modular_gap(ie, i_f, x), x) != 1) {
      v = {e, false, "first coordinate moved but second-coordinate difference not coprime to x"};
    } else if (je != jf) {
      v = {e, false, "first coordinate moved but third coordinate moved"};
    }
    report.all_pass = report.all_pass && v.pass;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

ConditionReport validate_fiber_conditions(const PermutationTable& t, std::uint32_t x,
                                          std::uint32_t y) {
  const std::uint32_t xy = x * y;
  if (t.size() != std::size_t{4} * xy) {
    throw Error(ErrorKind::Domain, "fiber permutation size does not match (x, y)");
  }
  ConditionReport report;
  for (std::uint32_t e = 0; e < t.size(); ++e) {
    const std::uint32_t f = t[e];
    const std::uint32_t ie = (e / y) % x, i_f = (f / y) % x, je = e % y, jf = f % y;
    ElementVerdict v{e, true, {}};
    if (e / xy == f / xy) {
      ++report.fixed_count;
      if (ie != i_f) {
        v = {e, false, "gamma fixed but i moved"};
      } else if (y != 1 && std::gcd(modular_gap(je, jf, y), y) != 1) {
        v = {e, false, "gamma fixed but j-difference not coprime to y"};
      }
    } else if (x != 1 && std::gcd(modular_gap(ie, i_f, x), x) != 1) {
      v = {e, false, "gamma moved but i-difference not coprime to x"};
    } else if (je != jf) {
      v = {e, false, "gamma moved but j moved"};
    }
    report.all_pass = report.all_pass && v.pass;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace hwp
