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

#include "hwp/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hwp/error.hpp"

namespace hwp {

using nlohmann::ordered_json;

ordered_json to_json(const DecompositionFile& file) {
  ordered_json j;
  if (file.kind) j["kind"] = *file.kind;
  j["order"] = file.decomposition.order;
  j["params"] = file.params;
  if (file.decomposition.one_factor) {
    ordered_json m = ordered_json::array();
    for (const Edge& e : *file.decomposition.one_factor) m.push_back({e.u, e.v});
    j["one_factor"] = std::move(m);
  } else {
    j["one_factor"] = nullptr;
  }
  ordered_json factors = ordered_json::array();
  for (const CycleFactor& f : file.decomposition.factors) {
    ordered_json cycles = ordered_json::array();
    for (const Cycle& c : f.cycles) cycles.push_back(c);
    factors.push_back({{"cycle_length", f.cycle_length}, {"cycles", std::move(cycles)}});
  }
  j["factors"] = std::move(factors);
  if (file.provenance) j["provenance"] = *file.provenance;
  return j;
}

std::string to_json_text(const DecompositionFile& file) { return to_json(file).dump() + "\n"; }

namespace {

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorKind::Corrupt, "malformed decomposition file: " + what);
}

bool is_count(const ordered_json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

VertexId vertex_of(const ordered_json& v) {
  if (!is_count(v) || v.get<std::uint64_t>() > UINT32_MAX) {
    corrupt("vertex ids must be non-negative 32-bit integers");
  }
  return v.get<VertexId>();
}

}  // namespace

DecompositionFile parse_decomposition(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    corrupt(e.what());
  }
  if (!j.is_object()) corrupt("top level is not an object");
  DecompositionFile file;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) corrupt("kind is not a string");
    file.kind = j["kind"].get<std::string>();
  }
  if (!j.contains("order") || !is_count(j["order"])) corrupt("missing order");
  file.decomposition.order = j["order"].get<std::size_t>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) corrupt("params is not an object");
    file.params = j["params"];
  }
  if (j.contains("one_factor") && !j["one_factor"].is_null()) {
    if (!j["one_factor"].is_array()) corrupt("one_factor is not an array");
    std::vector<Edge> m;
    for (const auto& e : j["one_factor"]) {
      if (!e.is_array() || e.size() != 2) corrupt("one_factor entries must be pairs");
      m.push_back({vertex_of(e[0]), vertex_of(e[1])});
    }
    file.decomposition.one_factor = std::move(m);
  }
  if (!j.contains("factors") || !j["factors"].is_array()) corrupt("missing factors");
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("cycles") || !f["cycles"].is_array()) {
      corrupt("factor without cycles");
    }
    CycleFactor factor;
    if (f.contains("cycle_length")) {
      if (!is_count(f["cycle_length"])) corrupt("cycle_length is not an integer");
      factor.cycle_length = f["cycle_length"].get<std::size_t>();
    }
    for (const auto& c : f["cycles"]) {
      if (!c.is_array()) corrupt("cycle is not an array");
      Cycle cycle;
      for (const auto& v : c) cycle.push_back(vertex_of(v));
      factor.cycles.push_back(std::move(cycle));
    }
    file.decomposition.factors.push_back(std::move(factor));
  }
  if (j.contains("provenance")) file.provenance = j["provenance"];
  return file;
}

std::string to_text(const DecompositionFile& file) {
  std::ostringstream os;
  os << "# order " << file.decomposition.order;
  if (file.kind) os << " kind " << *file.kind;
  for (const auto& [key, value] : file.params.items()) os << " " << key << "=" << value.dump();
  os << "\n";
  for (std::size_t f = 0; f < file.decomposition.factors.size(); ++f) {
    const CycleFactor& factor = file.decomposition.factors[f];
    os << "factor " << f << " C" << factor.cycle_length << "\n";
    for (const Cycle& c : factor.cycles) {
      os << "(";
      for (std::size_t t = 0; t < c.size(); ++t) os << (t ? " " : "") << c[t];
      os << ")";
    }
    os << "\n";
  }
  if (file.decomposition.one_factor) {
    os << "one_factor\n";
    for (const Edge& e : *file.decomposition.one_factor) os << "(" << e.u << " " << e.v << ")";
    os << "\n";
  }
  return os.str();
}

std::string to_dot(const DecompositionFile& file) {
  std::ostringstream os;
  os << "graph decomposition {\n";
  for (std::size_t v = 0; v < file.decomposition.order; ++v) os << "  v" << v << ";\n";
  for (std::size_t f = 0; f < file.decomposition.factors.size(); ++f) {
    for (const Cycle& c : file.decomposition.factors[f].cycles) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        os << "  v" << c[t] << " -- v" << c[(t + 1) % c.size()] << " [label=\"" << f << "\"];\n";
      }
    }
  }
  if (file.decomposition.one_factor) {
    for (const Edge& e : *file.decomposition.one_factor) {
      os << "  v" << e.u << " -- v" << e.v << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

namespace {

std::size_t param(const DecompositionFile& file, const char* key) {
  if (!file.params.contains(key) || !is_count(file.params[key])) {
    corrupt(std::string("params.") + key + " missing");
  }
  return file.params[key].get<std::size_t>();
}

}  // namespace

Target infer_target(const DecompositionFile& file) {
  const std::string kind = file.kind.value_or("hwp");
  if (kind == "hwp" || kind == "complete") {
    return complete_target_for(file.decomposition.order);
  }
  if (kind == "equipartite") return EquipartiteTarget{param(file, "h"), param(file, "u")};
  if (kind == "cyclic") {
    const std::size_t n = param(file, "n");
    if (n == 0 || file.decomposition.order % n != 0) corrupt("order not divisible by n");
    return CyclicMultipartiteTarget{file.decomposition.order / n, n};
  }
  corrupt("unknown kind '" + kind + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::NotFound, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::NotFound, "cannot write " + tmp.string());
    out << contents;
    if (!out) throw Error(ErrorKind::NotFound, "write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace hwp
