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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hwp/io.hpp"

namespace fs = std::filesystem;
using hwp::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / "hwp-cli-test";
  fs::create_directories(p);
  return p;
}

const std::vector<std::string> kInstance = {"--x", "3", "--y", "3", "--k", "1", "--v", "12", "--m", "3"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("construct then verify") {
  const std::string out = (scratch() / "k36.json").string();
  auto args = with({"construct"}, kInstance);
  args = with(args, {"--r", "17", "--s", "0", "--out", out});
  const Result c = call(args);
  CHECK(c.code == 0);
  CHECK(c.out.find("C6 x 17") != std::string::npos);
  const hwp::DecompositionFile f = hwp::parse_decomposition(hwp::read_file(out));
  CHECK(f.decomposition.factors.size() == 17);
  CHECK(f.decomposition.one_factor->size() == 18);
  const Result v = call({"verify", out});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS", 0) == 0);

  // Identical invocations give identical bytes.
  const std::string again = (scratch() / "k36-again.json").string();
  args.back() = again;
  CHECK(call(args).code == 0);
  CHECK(hwp::read_file(out) == hwp::read_file(again));
}

TEST_CASE("construct rejects bad instances") {
  const Result r1 = call(with(with({"construct"}, kInstance), {"--r", "1", "--s", "16"}));
  CHECK(r1.code == 3);
  CHECK(r1.err.find("r, s ≠ 1") != std::string::npos);
  const Result r2 = call({"construct", "--x", "3", "--y", "3", "--k", "1", "--v", "18", "--m", "3",
                          "--r", "0", "--s", "26"});
  CHECK(r2.code == 3);
  CHECK(r2.err.find("4^k divides v") != std::string::npos);
  const Result r3 = call(with(with({"construct"}, kInstance), {"--r", "0", "--s", "17"}));
  CHECK(r3.code == 3);
  CHECK(r3.err.find("(12,3)") != std::string::npos);
  CHECK(call(with({"construct"}, kInstance)).code == 2);
  CHECK(call({"construct", "--bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("construct formats") {
  const auto base = with(with({"construct"}, kInstance), {"--r", "5", "--s", "12"});
  const Result text = call(with(base, {"--format", "text"}));
  CHECK(text.code == 0);
  CHECK(text.out.find("factor 0 C6") != std::string::npos);
  const Result dot = call(with(base, {"--format", "dot"}));
  CHECK(dot.out.rfind("graph", 0) == 0);
  CHECK(call(with(base, {"--format", "xml"})).code == 2);
}

TEST_CASE("verify failures") {
  const fs::path dir = scratch();
  const std::string good = (dir / "good.json").string();
  CHECK(call(with(with({"construct"}, kInstance), {"--r", "17", "--s", "0", "--out", good})).code == 0);
  hwp::DecompositionFile f = hwp::parse_decomposition(hwp::read_file(good));
  std::swap(f.decomposition.factors[0].cycles[0][0], f.decomposition.factors[1].cycles[0][2]);
  const std::string bad = (dir / "bad.json").string();
  hwp::write_file_atomic(bad, hwp::to_json_text(f));
  const Result v = call({"verify", bad});
  CHECK(v.code == 1);
  CHECK(v.out.find("FAIL") == 0);
  const std::string empty = (dir / "empty.json").string();
  std::ofstream(empty).close();
  CHECK(call({"verify", empty}).code == 2);
  CHECK(call({"verify", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("feasibility probe") {
  const Result a = call(with(with({"feasible"}, kInstance), {"--format", "text"}));
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const Result b = call({"feasible", "--x", "3", "--y", "3", "--k", "1", "--v", "12", "--m", "4"});
  CHECK(b.code == 3);
  const auto j = nlohmann::json::parse(b.out);
  bool even_failed = false;
  for (const auto& item : j["items"]) even_failed |= item["id"] == "eq-even" && !item["pass"];
  CHECK(even_failed);
  CHECK(call({"feasible", "--x", "3", "--y", "9", "--k", "1", "--v", "36", "--m", "3"}).code == 0);
  const Result split = call(with(with({"feasible"}, kInstance), {"--r", "6", "--s", "11"}));
  CHECK(split.code == 3);
  CHECK(split.out.find("r_α = 1") != std::string::npos);
}

TEST_CASE("ingredients") {
  const fs::path reg = scratch() / "registry";
  fs::remove_all(reg);
  const Result a = call({"ingredient", "equipartite", "--h", "3", "--u", "3", "--z", "3",
                         "--registry", reg.string()});
  CHECK(a.code == 0);
  CHECK(fs::exists(reg / "equipartite-h3-u3-z3.json"));
  CHECK(call({"verify", (reg / "equipartite-h3-u3-z3.json").string()}).code == 0);
  const Result b = call({"ingredient", "complete", "--v", "6", "--n", "3"});
  CHECK(b.code == 3);
  CHECK(b.err.find("(6,3)") != std::string::npos);
  const Result c = call({"ingredient", "complete", "--v", "6", "--n", "6", "--registry", reg.string()});
  CHECK(c.code == 0);
  CHECK(c.out.find("direct") != std::string::npos);
  const Result d = call({"ingredient", "complete", "--v", "44", "--n", "4", "--registry", reg.string()});
  CHECK(d.code == 4);
}

TEST_CASE("bricks") {
  const std::string out = (scratch() / "brick.json").string();
  const Result r = call({"brick", "--k", "1", "--x", "1", "--y", "3", "--n", "3", "--sp", "5",
                         "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.find("C6 x 5") != std::string::npos);
  CHECK(r.out.find("C9 x 7") != std::string::npos);
  CHECK(call({"verify", out}).code == 0);
  CHECK(call({"brick", "--k", "1", "--x", "1", "--y", "3", "--n", "3", "--sp", "11"}).code == 3);
}
