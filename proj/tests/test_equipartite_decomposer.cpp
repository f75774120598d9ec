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

#include "doctest.h"
#include "hwp/equipartite_decomposer.hpp"
#include "hwp/error.hpp"
#include "hwp/verifier.hpp"
#include "oracles.hpp"

using namespace hwp;

using Lengths = std::map<std::size_t, std::size_t>;

TEST_CASE("C(4^k:n) decompositions") {
  CHECK(oracle::spectrum(decompose_c4k_n(1, 3, 4)) == Lengths{{3, 4}});
  CHECK(oracle::spectrum(decompose_c4k_n(1, 3, 0)) == Lengths{{6, 4}});
  CHECK(oracle::spectrum(decompose_c4k_n(1, 5, 2)) == Lengths{{5, 2}, {10, 2}});
  CHECK_THROWS_AS(decompose_c4k_n(1, 3, 3), Error);
  CHECK_THROWS_AS(decompose_c4k_n(2, 3, 15), Error);
  for (unsigned k = 1; k <= 2; ++k) {
    const std::size_t q = ring_size(k);
    for (std::size_t r = 0; r <= q; ++r) {
      if (r == q - 1) continue;
      const auto fs = decompose_c4k_n(k, 5, r);
      CHECK(oracle::covers_cyclic_exactly(fs, q, 5));
    }
  }
}

TEST_CASE("admissible requests") {
  CHECK(sp_admissible(1, 1, 1, 0));
  CHECK(!sp_admissible(1, 1, 1, 1));
  CHECK(!sp_admissible(1, 1, 1, 3));
  CHECK(sp_admissible(1, 3, 1, 10));
  CHECK(!sp_admissible(1, 3, 1, 11));
  CHECK(!sp_admissible(1, 3, 1, 13));
  CHECK_THROWS_AS(decompose_c4kxy_n({1, 3, 1, 3, 1}), Error);
  CHECK_THROWS_AS(decompose_c4kxy_n({1, 3, 1, 4, 2}), Error);
  CHECK_THROWS_AS(decompose_c4kxy_n({1, 2, 1, 3, 2}), Error);
}

TEST_CASE("C(4^k xy:n) decompositions") {
  CHECK(oracle::spectrum(decompose_c4kxy_n({1, 1, 1, 3, 4})) == Lengths{{6, 4}});
  CHECK(oracle::spectrum(decompose_c4kxy_n({1, 3, 1, 3, 0})) == Lengths{{3, 12}});
  const auto fs = decompose_c4kxy_n({1, 1, 3, 3, 5});
  CHECK(oracle::spectrum(fs) == Lengths{{6, 5}, {9, 7}});
  CHECK(oracle::covers_cyclic_exactly(fs, 12, 3));
  Decomposition d{36, fs, std::nullopt};
  CHECK(verify_decomposition(d, CyclicMultipartiteTarget{12, 3}).pass);
  // The moved elements of the permutation give the long factors.
  const EquipartiteRequest req{1, 3, 5, 3, 20};
  CHECK(request_permutation(req).size() == 60);
  CHECK(oracle::spectrum(decompose_c4kxy_n(req)) == Lengths{{18, 20}, {15, 40}});
}

TEST_CASE("orientation dropping") {
  const std::vector<CycleFactor> tri{{3, {{0, 1, 2}}}};
  const auto u = to_undirected(tri);
  CHECK(u[0].cycles[0] == Cycle{0, 1, 2});
  CHECK(canonical_undirected({4, 2, 7, 1}) == Cycle{1, 4, 2, 7});
  const std::vector<CycleFactor> both{{3, {{0, 1, 2}}}, {3, {{0, 2, 1}}}};
  CHECK_THROWS_AS(to_undirected(both), Error);
  const auto fs = to_undirected(decompose_c4kxy_n({1, 1, 1, 3, 2}));
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t count = 0;
  for (const CycleFactor& f : fs) {
    for (const Cycle& c : f.cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto a = c[i], b = c[(i + 1) % c.size()];
        edges.insert({std::min(a, b), std::max(a, b)});
        ++count;
      }
    }
  }
  CHECK(count == 48);
  CHECK(edges.size() == 48);
}
