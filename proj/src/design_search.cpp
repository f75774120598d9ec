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

#include "design_search.hpp"

#include <algorithm>

#include "hwp/equipartite_decomposer.hpp"
#include "hwp/error.hpp"

namespace hwp::detail {

ClassProblem make_problem(std::size_t order, std::size_t cycle_length, std::size_t base_factors) {
  ClassProblem p;
  p.order = order;
  p.cycle_length = cycle_length;
  p.base_factors = base_factors;
  p.edge_class.assign(order * order, -1);
  return p;
}

namespace {

class Search {
 public:
  Search(const ClassProblem& p, std::uint64_t& budget)
      : p_(p), budget_(budget), used_(p.class_count, 0), covered_(p.order, 0) {}

  std::optional<std::vector<CycleFactor>> run() {
    if (p_.base_factors * p_.order > p_.class_count || p_.order % p_.cycle_length != 0) {
      return std::nullopt;
    }
    if (!factor(0)) return std::nullopt;
    return done_;
  }

 private:
  void tick() {
    if (budget_ == 0) throw Error(ErrorKind::SearchExhausted, "search node budget exhausted");
    --budget_;
  }

  bool factor(std::size_t t) {
    if (t == p_.base_factors) return true;
    std::fill(covered_.begin(), covered_.end(), 0);
    covered_count_ = 0;
    current_.clear();
    return cycle(t);
  }

  bool cycle(std::size_t t) {
    tick();
    if (covered_count_ == p_.order) {
      done_.push_back({p_.cycle_length, current_});
      const auto saved_cover = covered_;
      const auto saved_current = current_;
      if (factor(t + 1)) return true;
      done_.pop_back();
      covered_ = saved_cover;
      current_ = saved_current;
      covered_count_ = p_.order;
      return false;
    }
    if (!forward_check()) return false;
    VertexId s = 0;
    while (covered_[s]) ++s;
    path_.assign(1, s);
    cover(s, 1);
    const bool ok = grow(t);
    cover(s, 0);
    path_.clear();
    return ok;
  }

  bool grow(std::size_t t) {
    tick();
    const VertexId s = path_.front();
    const VertexId last = path_.back();
    if (path_.size() == p_.cycle_length) {
      const int c = p_.cls(last, s);
      if (c < 0 || used_[c] || !(path_[1] < last)) return false;
      used_[c] = 1;
      current_.push_back(path_);
      const auto saved_path = path_;
      const bool ok = cycle(t);
      if (ok) return true;
      path_ = saved_path;
      current_.pop_back();
      used_[c] = 0;
      return false;
    }
    VertexId only = p_.order;
    if (p_.anchor && path_.size() == 1 && current_.empty()) {
      for (VertexId w = 0; w < p_.order; ++w) {
        const int c = p_.cls(s, w);
        if (c >= 0 && !used_[c]) {
          only = w;
          break;
        }
      }
      if (only == p_.order) return false;
    }
    for (VertexId w = s + 1; w < p_.order; ++w) {
      if (only != p_.order && w != only) continue;
      if (covered_[w]) continue;
      if (path_.size() == p_.cycle_length - 1 && w < path_[1]) continue;
      const int c = p_.cls(last, w);
      if (c < 0 || used_[c]) continue;
      used_[c] = 1;
      path_.push_back(w);
      cover(w, 1);
      const bool ok = grow(t);
      if (ok) return true;
      cover(w, 0);
      path_.pop_back();
      used_[c] = 0;
    }
    return false;
  }

  // Each vertex still to be placed needs two usable edges among the unplaced.
  bool forward_check() const {
    for (VertexId a = 0; a < p_.order; ++a) {
      if (covered_[a]) continue;
      int free = 0;
      for (VertexId b = 0; b < p_.order && free < 2; ++b) {
        if (b == a || covered_[b]) continue;
        const int c = p_.cls(a, b);
        if (c >= 0 && !used_[c]) ++free;
      }
      if (free < 2) return false;
    }
    return true;
  }

  void cover(VertexId v, char on) {
    covered_[v] = on;
    covered_count_ += on ? 1 : -1;
  }

  const ClassProblem& p_;
  std::uint64_t& budget_;
  std::vector<char> used_;
  std::vector<char> covered_;
  std::size_t covered_count_ = 0;
  std::vector<Cycle> current_;
  Cycle path_;
  std::vector<CycleFactor> done_;
};

}  // namespace

std::optional<std::vector<CycleFactor>> search_base_factors(const ClassProblem& problem,
                                                            std::uint64_t& budget) {
  Search search(problem, budget);
  return search.run();
}

std::vector<CycleFactor> develop(const std::vector<CycleFactor>& base,
                                 const std::vector<VertexId>& sigma, std::size_t period) {
  std::vector<CycleFactor> out;
  for (const CycleFactor& f : base) {
    std::vector<VertexId> power(sigma.size());
    for (VertexId v = 0; v < power.size(); ++v) power[v] = v;
    for (std::size_t j = 0; j < period; ++j) {
      CycleFactor image{f.cycle_length, {}};
      for (const Cycle& c : f.cycles) {
        Cycle mapped;
        for (VertexId v : c) mapped.push_back(power[v]);
        image.cycles.push_back(canonical_undirected(std::move(mapped)));
      }
      std::sort(image.cycles.begin(), image.cycles.end());
      out.push_back(std::move(image));
      for (VertexId& v : power) v = sigma[v];
    }
  }
  return out;
}

}  // namespace hwp::detail
