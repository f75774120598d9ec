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

#include "hwp/ring4k.hpp"

#include <array>
#include <numeric>

#include "hwp/error.hpp"

namespace hwp {

namespace {

void require_same_k(const RingElement& u, const RingElement& v) {
  if (u.k() != v.k()) {
    throw Error(ErrorKind::Domain, "ring elements with different exponents: k=" +
                                       std::to_string(u.k()) + " and k=" + std::to_string(v.k()));
  }
}

}  // namespace

RingElement::RingElement(std::int64_t a, std::int64_t b, unsigned k) : k_(k) {
  if (k < 1 || k > kMaxRingExponent) {
    throw Error(ErrorKind::Domain, "ring exponent k must lie in [1, " +
                                       std::to_string(kMaxRingExponent) + "], got " +
                                       std::to_string(k));
  }
  const std::int64_t mod = std::int64_t{1} << k;
  a_ = static_cast<std::uint32_t>(((a % mod) + mod) % mod);
  b_ = static_cast<std::uint32_t>(((b % mod) + mod) % mod);
}

RingElement RingElement::from_flat(std::uint32_t index, unsigned k) {
  if (k < 1 || k > kMaxRingExponent || index >= ring_size(k)) {
    throw Error(ErrorKind::Domain, "flat ring index " + std::to_string(index) +
                                       " out of range for k=" + std::to_string(k));
  }
  return {index >> k, index & ((std::uint32_t{1} << k) - 1), k};
}

std::size_t ring_size(unsigned k) { return std::size_t{1} << (2 * k); }

std::vector<RingElement> ring_elements(unsigned k) {
  std::vector<RingElement> out;
  const auto n = static_cast<std::uint32_t>(ring_size(k));
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(RingElement::from_flat(i, k));
  return out;
}

RingElement ring_add(const RingElement& u, const RingElement& v) {
  require_same_k(u, v);
  return {std::int64_t{u.a()} + v.a(), std::int64_t{u.b()} + v.b(), u.k()};
}

RingElement ring_sub(const RingElement& u, const RingElement& v) {
  require_same_k(u, v);
  return {std::int64_t{u.a()} - v.a(), std::int64_t{u.b()} - v.b(), u.k()};
}

RingElement ring_neg(const RingElement& u) {
  return {-std::int64_t{u.a()}, -std::int64_t{u.b()}, u.k()};
}

RingElement ring_mul(const RingElement& u, const RingElement& v) {
  require_same_k(u, v);
  // (a1 + b1 x)(a2 + b2 x) = a1 a2 + (a1 b2 + b1 a2) x + b1 b2 x^2, with x^2 = -x - 1.
  const std::int64_t a1 = u.a(), b1 = u.b(), a2 = v.a(), b2 = v.b();
  const std::int64_t sq = b1 * b2;
  return {a1 * a2 - sq, a1 * b2 + b1 * a2 - sq, u.k()};
}

RingElement f_alpha(const RingElement& alpha, const RingElement& y) {
  return ring_add(ring_mul(RingElement::x(y.k()), y), alpha);
}

ParityTriple pi(const RingElement& u) {
  const std::uint32_t cls = (u.a() & 1u) + 2 * (u.b() & 1u);
  return {u.a() >> 1, u.b() >> 1, cls};
}

RingElement pi_inv(const ParityTriple& t, unsigned k) {
  if (k < 1 || k > kMaxRingExponent) {
    throw Error(ErrorKind::Domain, "ring exponent out of range: " + std::to_string(k));
  }
  const std::uint32_t half = std::uint32_t{1} << (k - 1);
  if (t.adot >= half || t.bdot >= half || t.cls >= 4) {
    throw Error(ErrorKind::Domain, "parity triple (" + std::to_string(t.adot) + "," +
                                       std::to_string(t.bdot) + "," + std::to_string(t.cls) +
                                       ") outside the codomain for k=" + std::to_string(k));
  }
  return {std::int64_t{2} * t.adot + (t.cls & 1u), std::int64_t{2} * t.bdot + (t.cls >> 1), k};
}

std::uint32_t fiber_index(const RingElement& u) {
  const ParityTriple t = pi(u);
  return (t.adot << (u.k() - 1)) + t.bdot;
}

std::size_t fiber_count(unsigned k) { return std::size_t{1} << (2 * (k - 1)); }

DifferenceClass difference_class(const RingElement& u, const RingElement& v) {
  const RingElement d = ring_sub(u, v);
  if (d == RingElement::zero(d.k())) return DifferenceClass::Zero;
  const unsigned k = d.k();
  const std::array<RingElement, 8> adjacent = {
      RingElement{1, 0, k},  RingElement{-1, 0, k}, RingElement{0, 1, k},  RingElement{0, -1, k},
      RingElement{1, 1, k},  RingElement{-1, -1, k}, RingElement{-1, 1, k}, RingElement{1, -1, k},
  };
  for (const auto& e : adjacent) {
    if (d == e) return DifferenceClass::Adjacent;
  }
  return DifferenceClass::Other;
}

std::uint32_t additive_order(const RingElement& u) {
  // Order of (a, b) in Z_{2^k}^2 is the larger of the two coordinate orders.
  const std::uint32_t mod = u.modulus();
  const auto order_of = [mod](std::uint32_t c) { return mod / std::gcd(mod, c); };
  return std::max(order_of(u.a()), order_of(u.b()));
}

std::string to_string(const RingElement& u) {
  return std::to_string(u.a()) + "+" + std::to_string(u.b()) + "x";
}

const char* to_string(DifferenceClass c) noexcept {
  switch (c) {
    case DifferenceClass::Zero: return "Zero";
    case DifferenceClass::Adjacent: return "Adjacent";
    case DifferenceClass::Other: return "Other";
  }
  return "?";
}

}  // namespace hwp
