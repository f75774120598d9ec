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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hwp/assembly.hpp"
#include "hwp/equipartite_decomposer.hpp"
#include "hwp/error.hpp"
#include "hwp/ingredients.hpp"
#include "hwp/io.hpp"
#include "hwp/verifier.hpp"
#include "json.hpp"

namespace hwp::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::uint32_t x = 0, y = 0;
  unsigned k = 0;
  std::size_t v = 0, m = 0;
  std::optional<std::size_t> r, s;
  std::size_t h = 0, u = 0, z = 0, n = 0, sp = 0;
  std::string out;
  std::string format = "json";
  std::string registry;
  std::vector<std::uint64_t> search_cap;
  bool seedless = true;
  std::string path;
};

IngredientConfig make_config(const Options& o) {
  IngredientConfig cfg;
  if (!o.registry.empty()) cfg.registry = o.registry;
  if (o.search_cap.size() > 0) cfg.node_budget = o.search_cap[0];
  if (o.search_cap.size() > 1) cfg.equipartite_cap = o.search_cap[1];
  if (o.search_cap.size() > 2) cfg.complete_cap = o.search_cap[2];
  return cfg;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Infeasible:
    case ErrorKind::InfeasibleSplit:
    case ErrorKind::Unsupported:
      return kInfeasible;
    case ErrorKind::SearchExhausted:
    case ErrorKind::CapExceeded:
      return kExhausted;
    case ErrorKind::Corrupt:
    case ErrorKind::Domain:
    case ErrorKind::NotFound:
      return kMalformed;
    default:
      return kFail;
  }
}

std::string render(const DecompositionFile& file, const std::string& format) {
  if (format == "text") return to_text(file);
  if (format == "dot") return to_dot(file);
  return to_json_text(file);
}

// Artifact to --out when given, else to stdout.
void emit(const Options& o, const DecompositionFile& file, std::ostream& out) {
  const std::string body = render(file, o.format);
  if (o.out.empty()) {
    out << body;
  } else {
    write_file_atomic(o.out, body);
  }
}

std::string spectrum_line(const Decomposition& d) {
  std::ostringstream os;
  os << "spectrum:";
  for (const auto& [len, count] : spectrum(d).counts) os << " C" << len << " x " << count;
  if (d.one_factor) os << " + matching of " << d.one_factor->size() << " edges";
  return os.str();
}

HwpInstance instance_of(const Options& o) {
  HwpInstance inst;
  inst.x = o.x;
  inst.y = o.y;
  inst.k = o.k;
  inst.v = o.v;
  inst.m = o.m;
  inst.r = o.r;
  inst.s = o.s;
  return inst;
}

void print_report(const HypothesisReport& rep, std::ostream& os) {
  for (const HypothesisItem& i : rep.items) {
    os << (i.pass ? "PASS " : (i.blocking ? "FAIL " : "info ")) << i.id << ": " << i.statement;
    if (!i.detail.empty()) os << "  (" << i.detail << ")";
    os << "\n";
  }
}

ordered_json report_json(const HypothesisReport& rep) {
  ordered_json items = ordered_json::array();
  for (const HypothesisItem& i : rep.items) {
    items.push_back({{"id", i.id}, {"statement", i.statement}, {"pass", i.pass},
                     {"blocking", i.blocking}, {"detail", i.detail}});
  }
  return {{"all_pass", rep.all_pass()}, {"items", items}};
}

ordered_json plan_json(const SplitPlan& p) {
  return {{"z", p.z},
          {"x1", p.x1},
          {"y1", p.y1},
          {"v1", p.v1},
          {"brick_labels", p.brick_labels},
          {"r_alpha", p.r_alpha},
          {"s_alpha", p.s_alpha},
          {"r_beta", p.r_beta},
          {"s_beta", p.s_beta},
          {"clique", p.clique == CliqueType::Long ? "long" : "short"},
          {"brick_sp", p.brick_sp}};
}

ordered_json hwp_params(const HwpInstance& inst) {
  return {{"x", inst.x}, {"y", inst.y}, {"k", inst.k}, {"v", inst.v},
          {"m", inst.m}, {"r", *inst.r}, {"s", *inst.s}};
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const HwpInstance inst = instance_of(o);
  const HypothesisReport rep = check_hypotheses(inst);
  if (!rep.all_pass()) {
    err << "infeasible instance; failed hypotheses:\n";
    for (const HypothesisItem* i : rep.failures()) {
      err << "  " << i->statement << (i->detail.empty() ? "" : "  (" + i->detail + ")") << "\n";
    }
    return kInfeasible;
  }
  const HwpSolution sol = solve_hwp(inst, make_config(o));
  DecompositionFile file;
  file.params = hwp_params(inst);
  file.decomposition = sol.decomposition;
  file.provenance = ordered_json{{"split", plan_json(sol.plan)},
                                 {"equipartite_source", to_string(sol.equipartite_source)},
                                 {"complete_source", to_string(sol.complete_source)},
                                 {"verified", true}};
  emit(o, file, out);
  (o.out.empty() ? err : out) << spectrum_line(sol.decomposition) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  DecompositionFile file;
  Target target;
  try {
    file = parse_decomposition(read_file(o.path));
    target = infer_target(file);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kMalformed;
  }
  const VerificationReport rep = verify_decomposition(file.decomposition, target);
  std::vector<std::string> extra;
  const ordered_json& p = file.params;
  if (!file.kind && p.contains("x") && p.contains("y") && p.contains("k") && p.contains("r") &&
      p.contains("s")) {
    try {
      const std::size_t lo = (std::size_t{1} << p["k"].get<unsigned>()) * p["x"].get<std::size_t>();
      Spectrum want;
      if (p["r"].get<std::size_t>()) want.counts[lo] = p["r"].get<std::size_t>();
      if (p["s"].get<std::size_t>()) want.counts[p["y"].get<std::size_t>()] = p["s"].get<std::size_t>();
      if (!(spectrum(file.decomposition) == want)) extra.push_back("spectrum differs from params r, s");
    } catch (const nlohmann::json::exception& e) {
      err << "malformed params: " << e.what() << "\n";
      return kMalformed;
    }
  }
  if (rep.pass && extra.empty()) {
    out << "PASS " << spectrum_line(file.decomposition) << "\n";
    return kOk;
  }
  out << "FAIL\n";
  for (const Violation& v : rep.violations) out << "  " << to_string(v.kind) << ": " << v.witness << "\n";
  for (const std::string& e : extra) out << "  " << e << "\n";
  return kFail;
}

int cmd_feasible(const Options& o, std::ostream& out, std::ostream&) {
  const HwpInstance inst = instance_of(o);
  const HypothesisReport rep = check_hypotheses(inst);
  bool ok = rep.all_pass();
  std::optional<SplitPlan> plan;
  std::string split_error;
  if (ok && inst.r && inst.s) {
    try {
      plan = plan_split(inst);
    } catch (const Error& e) {
      split_error = e.what();
      ok = false;
    }
  }
  if (o.format == "json") {
    ordered_json j = report_json(rep);
    if (plan) j["split"] = plan_json(*plan);
    if (!split_error.empty()) j["split_error"] = split_error;
    j["feasible"] = ok;
    out << j.dump(2) << "\n";
  } else {
    print_report(rep, out);
    if (plan) out << "split: " << plan_json(*plan).dump() << "\n";
    if (!split_error.empty()) out << "split: " << split_error << "\n";
    out << (ok ? "feasible" : "infeasible") << "\n";
  }
  return ok ? kOk : kInfeasible;
}

int cmd_ingredient(const std::string& kind, const Options& o, std::ostream& out) {
  const IngredientConfig cfg = make_config(o);
  DesignSource source = DesignSource::Direct;
  DecompositionFile file;
  file.kind = kind;
  if (kind == "equipartite") {
    const EquipartiteDesign d = build_equipartite(o.h, o.u, o.z, cfg, &source);
    file.params = {{"h", o.h}, {"u", o.u}, {"z", o.z}};
    file.decomposition = d.decomposition();
    if (const auto dir = cfg.registry_dir()) registry_store(*dir, d);
  } else {
    const CompleteDesign d = build_complete(o.v, o.n, cfg, &source);
    file.params = {{"v", o.v}, {"n", o.n}};
    file.decomposition = d.decomposition();
    if (const auto dir = cfg.registry_dir()) registry_store(*dir, d);
  }
  if (!o.out.empty()) write_file_atomic(o.out, render(file, o.format));
  out << kind << " design " << file.params.dump() << " from " << to_string(source) << ", "
      << spectrum_line(file.decomposition) << "\n";
  if (const auto dir = cfg.registry_dir()) {
    out << "stored in " << *dir << "\n";
  } else {
    out << "no registry configured; not stored\n";
  }
  return kOk;
}

int cmd_brick(const Options& o, std::ostream& out, std::ostream& err) {
  EquipartiteRequest req;
  req.k = o.k;
  req.x = o.x;
  req.y = o.y;
  req.layers = o.n;
  req.sp = o.sp;
  DecompositionFile file;
  file.kind = "cyclic";
  file.params = {{"k", o.k}, {"x", o.x}, {"y", o.y}, {"n", o.n}, {"sp", o.sp}};
  file.decomposition.order = req.labels() * req.layers;
  file.decomposition.factors = decompose_c4kxy_n(req);
  const VerificationReport rep = verify_decomposition(file.decomposition, infer_target(file));
  if (!rep.pass) {
    err << "internal error: brick failed verification\n";
    return kFail;
  }
  emit(o, file, out);
  (o.out.empty() ? err : out) << spectrum_line(file.decomposition) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton-Waterloo factorizations of K_vm into C_{2^k x}- and C_y-factors"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_out) {
    if (with_out) sub->add_option("--out", o.out, "Output path (default: stdout)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--registry", o.registry, "Ingredient registry directory (overrides HWP_REGISTRY)");
    sub->add_option("--search-cap", o.search_cap,
                    "Node budget, then optional vertex caps for equipartite and complete searches")
        ->expected(1, 3);
    sub->add_flag("--seedless", o.seedless, "Deterministic mode (always on)");
  };
  auto add_instance = [&](CLI::App* sub, bool need_rs) {
    sub->add_option("--x", o.x)->required();
    sub->add_option("--y", o.y)->required();
    sub->add_option("--k", o.k)->required();
    sub->add_option("--v", o.v)->required();
    sub->add_option("--m", o.m)->required();
    auto* r = sub->add_option("--r", o.r);
    auto* s = sub->add_option("--s", o.s);
    if (need_rs) {
      r->required();
      s->required();
    }
  };

  CLI::App* construct = app.add_subcommand("construct", "Build and verify an HWP factorization");
  add_instance(construct, true);
  add_common(construct, true);

  CLI::App* verify = app.add_subcommand("verify", "Verify a decomposition file");
  verify->add_option("path", o.path)->required();

  CLI::App* feasible = app.add_subcommand("feasible", "Report hypotheses and the split");
  add_instance(feasible, false);
  feasible->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* ingredient = app.add_subcommand("ingredient", "Build and store an ingredient design");
  ingredient->require_subcommand(1);
  CLI::App* eq = ingredient->add_subcommand("equipartite", "C_z-factorization of K_(h:u)");
  eq->set_help_flag("--help", "Print this help message and exit");
  eq->add_option("--h", o.h)->required();
  eq->add_option("--u", o.u)->required();
  eq->add_option("--z", o.z)->required();
  add_common(eq, true);
  CLI::App* co = ingredient->add_subcommand("complete", "C_n-factorization of K_v");
  co->add_option("--v", o.v)->required();
  co->add_option("--n", o.n)->required();
  add_common(co, true);

  CLI::App* brick = app.add_subcommand("brick", "Directed decomposition of C->(4^k x y : n)");
  brick->add_option("--k", o.k)->required();
  brick->add_option("--x", o.x)->required();
  brick->add_option("--y", o.y)->required();
  brick->add_option("--n", o.n)->required();
  brick->add_option("--sp", o.sp)->required();
  add_common(brick, true);

  std::vector<std::string> argv_store = {"hwp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformed;
  }

  try {
    if (*construct) return cmd_construct(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*feasible) return cmd_feasible(o, out, err);
    if (*eq) return cmd_ingredient("equipartite", o, out);
    if (*co) return cmd_ingredient("complete", o, out);
    if (*brick) return cmd_brick(o, out, err);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kMalformed;
}

}  // namespace hwp::cli
