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

// Arithmetic in R = Z_{2^k}[x] / <x^2 + x + 1>. An element is a + b*x with
// a, b stored as least nonnegative residues modulo 2^k; the exponent k is
// carried by every element and mixing exponents is a domain error.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hwp {

/// Largest supported ring exponent (4^k labels must fit comfortably in 32 bits).
inline constexpr unsigned kMaxRingExponent = 12;

class RingElement {
 public:
  RingElement() = default;
  /// Reduces a and b modulo 2^k. Throws Error(Domain) unless 1 <= k <= kMaxRingExponent.
  RingElement(std::int64_t a, std::int64_t b, unsigned k);

  static RingElement zero(unsigned k) { return {0, 0, k}; }
  static RingElement one(unsigned k) { return {1, 0, k}; }
  /// The class of the indeterminate.
  static RingElement x(unsigned k) { return {0, 1, k}; }
  /// Inverse of flat(): index = a * 2^k + b.
  static RingElement from_flat(std::uint32_t index, unsigned k);

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  unsigned k() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return std::uint32_t{1} << k_; }

  /// Flat label a * 2^k + b used in vertex ids.
  std::uint32_t flat() const noexcept { return (a_ << k_) + b_; }

  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
  unsigned k_ = 1;
};

/// Number of ring elements, 4^k.
std::size_t ring_size(unsigned k);

/// All elements in flat order.
std::vector<RingElement> ring_elements(unsigned k);

RingElement ring_add(const RingElement& u, const RingElement& v);
RingElement ring_sub(const RingElement& u, const RingElement& v);
RingElement ring_neg(const RingElement& u);
/// Polynomial product reduced by x^2 = -x - 1.
RingElement ring_mul(const RingElement& u, const RingElement& v);

inline RingElement operator+(const RingElement& u, const RingElement& v) { return ring_add(u, v); }
inline RingElement operator-(const RingElement& u, const RingElement& v) { return ring_sub(u, v); }
inline RingElement operator-(const RingElement& u) { return ring_neg(u); }
inline RingElement operator*(const RingElement& u, const RingElement& v) { return ring_mul(u, v); }

/// f_alpha(y) = x*y + alpha. A bijection of R whose third iterate is the identity.
RingElement f_alpha(const RingElement& alpha, const RingElement& y);

/// Image of pi: (floor(a/2), floor(b/2), parity class) in Z_{2^{k-1}}^2 x Z_4.
struct ParityTriple {
  std::uint32_t adot = 0;
  std::uint32_t bdot = 0;
  std::uint32_t cls = 0;  // 0: (even, even), 1: (odd, even), 2: (even, odd), 3: (odd, odd)

  friend auto operator<=>(const ParityTriple&, const ParityTriple&) = default;
};

ParityTriple pi(const RingElement& u);
/// Throws Error(Domain) for coordinates outside Z_{2^{k-1}}^2 x Z_4.
RingElement pi_inv(const ParityTriple& t, unsigned k);

/// Index of the pi-fiber (adot, bdot) containing u: adot * 2^{k-1} + bdot.
std::uint32_t fiber_index(const RingElement& u);
/// Number of pi-fibers, 4^{k-1}.
std::size_t fiber_count(unsigned k);

enum class DifferenceClass { Zero, Adjacent, Other };

/// Adjacent iff u - v lies in {+-1, +-x, +-(x+1), +-(x-1)}.
DifferenceClass difference_class(const RingElement& u, const RingElement& v);

/// Least t >= 1 with t*u = 0.
std::uint32_t additive_order(const RingElement& u);

/// "a+bx", e.g. "3+2x".
std::string to_string(const RingElement& u);
const char* to_string(DifferenceClass c) noexcept;

}  // namespace hwp
