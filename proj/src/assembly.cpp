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

#include "hwp/assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hwp/equipartite_decomposer.hpp"
#include "hwp/error.hpp"
#include "hwp/verifier.hpp"

namespace hwp {

bool HypothesisReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const HypothesisItem& i) { return i.pass || !i.blocking; });
}

std::vector<const HypothesisItem*> HypothesisReport::failures() const {
  std::vector<const HypothesisItem*> out;
  for (const HypothesisItem& i : items) {
    if (!i.pass && i.blocking) out.push_back(&i);
  }
  return out;
}

const HypothesisItem* HypothesisReport::find(const std::string& id) const {
  for (const HypothesisItem& i : items) {
    if (i.id == id) return &i;
  }
  return nullptr;
}

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

std::string explain(const Feasibility& f) { return f.ok ? f.reason : "fails " + f.reason; }

struct Derived {
  std::size_t z = 0, x1 = 0, y1 = 0, n_labels = 0;
  bool n_divides_v = false;
  std::size_t v1 = 0;
};

Derived derive(const HwpInstance& inst) {
  Derived d;
  if (inst.x == 0 || inst.y == 0 || inst.k == 0 || inst.k > 12) return d;
  d.z = std::gcd(inst.x, inst.y);
  d.x1 = inst.x / d.z;
  d.y1 = inst.y / d.z;
  d.n_labels = (std::size_t{1} << (2 * inst.k)) * d.x1 * d.y1;
  d.n_divides_v = inst.v % d.n_labels == 0;
  if (d.n_divides_v) d.v1 = inst.v / d.n_labels;
  return d;
}

}  // namespace

HypothesisReport check_hypotheses(const HwpInstance& inst) {
  HypothesisReport rep;
  auto add = [&](std::string id, std::string statement, bool pass, std::string detail = {},
                 bool blocking = true) {
    rep.items.push_back({std::move(id), std::move(statement), pass, blocking, std::move(detail)});
  };
  const std::size_t x = inst.x, y = inst.y, v = inst.v, m = inst.m;
  const bool k_ok = inst.k >= 1 && inst.k <= 12;

  add("i", "v, m ≥ 3", v >= 3 && m >= 3, "v = " + num(v) + ", m = " + num(m));
  add("ii", "x, y are odd", x % 2 == 1 && y % 2 == 1, "x = " + num(x) + ", y = " + num(y));
  const std::size_t g = (x && y) ? std::gcd(x, y) : 0;
  add("iii", "gcd(x,y) ≥ 3", g >= 3, "gcd = " + num(g));
  add("iv", "x and y divide v", x && y && v % x == 0 && v % y == 0);
  add("k", "k ≥ 1", k_ok, "k = " + num(inst.k) + (inst.k > 12 ? " (supported up to 12)" : ""));
  const std::size_t four_k = k_ok ? (std::size_t{1} << (2 * inst.k)) : 0;
  add("v", "4^k divides v", k_ok && v % four_k == 0, k_ok ? "4^k = " + num(four_k) : "");

  const std::size_t total = v * m >= 1 ? (v * m - 1) / 2 : 0;
  if (inst.r && inst.s) {
    add("rs-sum", "r + s = ⌊(vm−1)/2⌋", *inst.r + *inst.s == total,
        "r + s = " + num(*inst.r + *inst.s) + ", ⌊(vm−1)/2⌋ = " + num(total));
    add("rs-one", "r, s ≠ 1", *inst.r != 1 && *inst.s != 1,
        "r = " + num(*inst.r) + ", s = " + num(*inst.s));
  }

  const Derived d = derive(inst);
  const bool have = d.z != 0;
  const std::string inst_note =
      have ? "x1 = " + num(d.x1) + ", y1 = " + num(d.y1) + ", z = " + num(d.z) : "";
  add("eq-odd", "x1, y1, z odd", have && d.x1 % 2 == 1 && d.y1 % 2 == 1 && d.z % 2 == 1, inst_note);
  add("eq-z", "z ≥ 3", have && d.z >= 3, inst_note);
  add("eq-gcd", "gcd(x1,y1) = 1", have && std::gcd(d.x1, d.y1) == 1, inst_note);
  const bool div = have && d.n_divides_v && (v * m) % (d.n_labels * d.z) == 0;
  add("eq-div", "vm ≡ 0 (mod 4^k x1 y1 z), v ≡ 0 (mod 4^k x1 y1)", div,
      have ? "4^k x1 y1 = " + num(d.n_labels) : "");
  const std::string need_div = "requires v ≡ 0 (mod 4^k x1 y1)";
  if (have && d.n_divides_v) {
    const std::size_t q = v * (m - 1) / d.n_labels;
    add("eq-even", "v(m−1)/4^k x1 y1 is even", q % 2 == 0, "v(m−1)/4^k x1 y1 = " + num(q));
    const bool exc = (d.v1 == 2 && m == 3 && d.z == 3) || (d.v1 == 6 && m == 3 && d.z == 3) ||
                     (d.v1 == 2 && m == 6 && d.z == 3) || (d.v1 == 6 && m == 2 && d.z == 6);
    add("eq-exc", "(v1, m, z) ∉ {(2,3,3), (6,3,3), (2,6,3), (6,2,6)}", !exc,
        "(v1, m, z) = (" + num(d.v1) + "," + num(m) + "," + num(d.z) + ")");
    const Feasibility fe = feasible_equipartite(d.v1, m, d.z);
    add("ing-equipartite", "K_(v1:m) has a resolvable C_z-factorization", fe.ok, explain(fe));
  } else {
    add("eq-even", "v(m−1)/4^k x1 y1 is even", false, need_div);
    add("eq-exc", "(v1, m, z) ∉ {(2,3,3), (6,3,3), (2,6,3), (6,2,6)}", false, need_div);
    add("ing-equipartite", "K_(v1:m) has a resolvable C_z-factorization", false, need_div);
  }
  const Feasibility fl = v >= 3 && k_ok ? feasible_complete(v, inst.long_length())
                                        : Feasibility{false, "v ≥ 3"};
  const Feasibility fs = v >= 3 ? feasible_complete(v, y) : Feasibility{false, "v ≥ 3"};
  add("ing-complete-long", "K_v has a C_{2^k x}-factorization", fl.ok, explain(fl), false);
  add("ing-complete-short", "K_v has a C_y-factorization", fs.ok, explain(fs), false);
  add("ing-clique", "at least one clique type feasible", fl.ok || fs.ok);
  return rep;
}

bool brick_sp_allowed(const SplitPlan& plan, std::size_t sp) {
  const std::size_t n = plan.brick_labels;
  if (sp > n || sp == 1) return false;
  if (plan.x1 == 1 && plan.y1 == 1) return true;
  return sp != n - 1;
}

namespace {

// reach[t][s]: s is a sum of t allowed brick values.
std::vector<std::vector<char>> brick_reach(const SplitPlan& plan, std::size_t bricks) {
  const std::size_t n = plan.brick_labels;
  std::vector<std::vector<char>> reach(bricks + 1, std::vector<char>(bricks * n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t t = 1; t <= bricks; ++t) {
    for (std::size_t s = 0; s <= t * n; ++s) {
      for (std::size_t b = 0; b <= std::min(n, s); ++b) {
        if (brick_sp_allowed(plan, b) && reach[t - 1][s - b]) {
          reach[t][s] = 1;
          break;
        }
      }
    }
  }
  return reach;
}

// Largest-first assignment; empty when the total is unreachable.
std::optional<std::vector<std::size_t>> assign_bricks(const SplitPlan& plan, std::size_t bricks,
                                                      std::size_t total) {
  const auto reach = brick_reach(plan, bricks);
  if (total >= reach[bricks].size() || !reach[bricks][total]) return std::nullopt;
  std::vector<std::size_t> out;
  std::size_t left = total;
  for (std::size_t t = bricks; t > 0; --t) {
    for (std::size_t b = std::min(plan.brick_labels, left) + 1; b-- > 0;) {
      if (brick_sp_allowed(plan, b) && reach[t - 1][left - b]) {
        out.push_back(b);
        left -= b;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SplitPlan plan_split(const HwpInstance& inst) {
  const HypothesisReport rep = check_hypotheses(inst);
  if (!inst.r || !inst.s) throw Error(ErrorKind::Domain, "plan_split needs r and s");
  if (!rep.all_pass()) {
    std::string msg = "hypotheses fail:";
    for (const HypothesisItem* i : rep.failures()) msg += " [" + i->statement + "]";
    throw Error(ErrorKind::Infeasible, msg);
  }
  const Derived d = derive(inst);
  SplitPlan base;
  base.z = d.z;
  base.x1 = d.x1;
  base.y1 = d.y1;
  base.v1 = d.v1;
  base.brick_labels = d.n_labels;
  const std::size_t v = inst.v, m = inst.m, r = *inst.r, s = *inst.s;
  const std::size_t clique = (v - 1) / 2;
  const std::size_t equi = v * (m - 1) / 2;
  const std::size_t bricks = d.v1 * (m - 1) / 2;

  std::vector<CliqueType> order = {CliqueType::Long, CliqueType::Short};
  if (s < r) std::swap(order[0], order[1]);

  std::vector<std::string> obstructions;
  for (CliqueType type : order) {
    const bool is_long = type == CliqueType::Long;
    const std::string label = is_long ? "r_β = " + num(clique) : "s_β = " + num(clique);
    const std::size_t n = is_long ? inst.long_length() : inst.short_length();
    const Feasibility f = feasible_complete(v, n);
    if (!f.ok) {
      obstructions.push_back(label + " needs a C_" + num(n) + "-factorization of K_" + num(v) +
                             ", excluded by " + f.reason);
      continue;
    }
    const std::size_t have = is_long ? r : s;
    if (have < clique) {
      obstructions.push_back(label + " exceeds " + (is_long ? "r = " : "s = ") + num(have));
      continue;
    }
    SplitPlan plan = base;
    plan.clique = type;
    plan.r_beta = is_long ? clique : 0;
    plan.s_beta = is_long ? 0 : clique;
    plan.r_alpha = r - plan.r_beta;
    plan.s_alpha = s - plan.s_beta;
    if (plan.r_alpha + plan.s_alpha != equi) {
      obstructions.push_back(label + " leaves r_α + s_α ≠ v(m−1)/2");
      continue;
    }
    if (plan.r_alpha == 1 || plan.s_alpha == 1) {
      obstructions.push_back(label + " forces " + (plan.r_alpha == 1 ? "r_α = 1" : "s_α = 1"));
      continue;
    }
    auto assigned = assign_bricks(plan, bricks, plan.r_alpha);
    if (!assigned) {
      obstructions.push_back(label + ": r_α = " + num(plan.r_alpha) + " is not a sum of " +
                             num(bricks) + " admissible brick values");
      continue;
    }
    plan.brick_sp = std::move(*assigned);
    return plan;
  }
  std::string msg = "no feasible split:";
  for (const std::string& o : obstructions) msg += " [" + o + "]";
  throw Error(ErrorKind::InfeasibleSplit, msg);
}

namespace {

std::vector<CycleFactor> brick(const SplitPlan& plan, const HwpInstance& inst, std::size_t sp) {
  if (plan.x1 == 1 && plan.y1 == 1) {
    return to_undirected(decompose_c4k_n(inst.k, plan.z, plan.brick_labels - sp));
  }
  EquipartiteRequest req;
  req.k = inst.k;
  req.x = static_cast<std::uint32_t>(plan.x1);
  req.y = static_cast<std::uint32_t>(plan.y1);
  req.layers = plan.z;
  req.sp = sp;
  return to_undirected(decompose_c4kxy_n(req));
}

void canonicalize(CycleFactor& f) {
  for (Cycle& c : f.cycles) c = canonical_undirected(std::move(c));
  std::sort(f.cycles.begin(), f.cycles.end());
}

}  // namespace

std::vector<CycleFactor> weight_and_fill(const EquipartiteDesign& design, const SplitPlan& plan,
                                         const HwpInstance& inst) {
  if (design.h != plan.v1 || design.u != inst.m || design.z != plan.z) {
    throw Error(ErrorKind::Domain, "ingredient design does not match the split plan");
  }
  if (design.factors.size() != plan.brick_sp.size()) {
    throw Error(ErrorKind::Domain, "split plan has the wrong number of brick entries");
  }
  const std::size_t n = plan.brick_labels;
  std::map<std::size_t, std::vector<CycleFactor>> bricks;
  std::vector<CycleFactor> out;
  for (std::size_t f = 0; f < design.factors.size(); ++f) {
    const std::size_t sp = plan.brick_sp[f];
    if (!brick_sp_allowed(plan, sp)) {
      throw Error(ErrorKind::Infeasible, "brick value " + num(sp) + " is not admissible");
    }
    auto it = bricks.find(sp);
    if (it == bricks.end()) it = bricks.emplace(sp, brick(plan, inst, sp)).first;
    for (const CycleFactor& layer : it->second) {
      CycleFactor lifted{layer.cycle_length, {}};
      for (const Cycle& ring : design.factors[f].cycles) {
        for (const Cycle& bc : layer.cycles) {
          Cycle c;
          c.reserve(bc.size());
          for (VertexId b : bc) {
            const VertexId ingredient = ring[b / n];
            const std::size_t part = ingredient / plan.v1, u = ingredient % plan.v1;
            c.push_back(static_cast<VertexId>(part * inst.v + u * n + b % n));
          }
          lifted.cycles.push_back(std::move(c));
        }
      }
      canonicalize(lifted);
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

HwpSolution solve_hwp(const HwpInstance& inst, const IngredientConfig& config) {
  HwpSolution sol;
  sol.plan = plan_split(inst);
  const SplitPlan& plan = sol.plan;
  const EquipartiteDesign design =
      build_equipartite(plan.v1, inst.m, plan.z, config, &sol.equipartite_source);
  std::vector<CycleFactor> alpha = weight_and_fill(design, plan, inst);

  const std::size_t clique_len =
      plan.clique == CliqueType::Long ? inst.long_length() : inst.short_length();
  const CompleteDesign cd = build_complete(inst.v, clique_len, config, &sol.complete_source);
  std::vector<CycleFactor> beta;
  for (const CycleFactor& f : cd.factors) {
    CycleFactor united{f.cycle_length, {}};
    for (std::size_t p = 0; p < inst.m; ++p) {
      for (const Cycle& c : f.cycles) {
        Cycle moved;
        for (VertexId w : c) moved.push_back(static_cast<VertexId>(p * inst.v + w));
        united.cycles.push_back(std::move(moved));
      }
    }
    canonicalize(united);
    beta.push_back(std::move(united));
  }

  Decomposition& d = sol.decomposition;
  d.order = inst.v * inst.m;
  for (const std::size_t len : {inst.long_length(), inst.short_length()}) {
    for (const auto* side : {&alpha, &beta}) {
      for (const CycleFactor& f : *side) {
        if (f.cycle_length == len) d.factors.push_back(f);
      }
    }
  }
  if (d.factors.size() != alpha.size() + beta.size()) {
    throw Error(ErrorKind::Verification, "assembled factor of unexpected cycle length");
  }
  std::vector<Edge> matching;
  if (cd.one_factor) {
    for (std::size_t p = 0; p < inst.m; ++p) {
      for (const Edge& e : *cd.one_factor) {
        matching.push_back({static_cast<VertexId>(p * inst.v + e.u),
                            static_cast<VertexId>(p * inst.v + e.v)});
      }
    }
    std::sort(matching.begin(), matching.end());
    d.one_factor = std::move(matching);
  }

  const VerificationReport report = verify_decomposition(d, complete_target_for(d.order));
  if (!report.pass) {
    const Violation& v = report.violations.front();
    throw Error(ErrorKind::Verification,
                std::string("assembled decomposition rejected: ") + to_string(v.kind) + ": " +
                    v.witness);
  }
  Spectrum want;
  if (*inst.r) want.counts[inst.long_length()] = *inst.r;
  if (*inst.s) want.counts[inst.short_length()] = *inst.s;
  if (!(spectrum(d) == want)) {
    throw Error(ErrorKind::Verification, "assembled decomposition has the wrong spectrum");
  }
  return sol;
}

}  // namespace hwp
