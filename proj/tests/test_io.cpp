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
#include "hwp/error.hpp"
#include "hwp/ingredients.hpp"
#include "hwp/io.hpp"

using namespace hwp;

TEST_CASE("JSON round trip") {
  DecompositionFile f;
  f.params = {{"v", 8}, {"n", 8}};
  f.kind = "complete";
  f.decomposition = walecki(8).decomposition();
  f.provenance = nlohmann::ordered_json{{"note", "test"}};
  const std::string text = to_json_text(f);
  CHECK(text.find("\"kind\"") < text.find("\"order\""));
  CHECK(text.find("\"order\"") < text.find("\"params\""));
  CHECK(text.find("\"one_factor\"") < text.find("\"factors\""));
  const DecompositionFile back = parse_decomposition(text);
  CHECK(back.decomposition == f.decomposition);
  CHECK(back.kind == f.kind);
  CHECK(back.params == f.params);
  CHECK(to_json_text(back) == text);
}

TEST_CASE("malformed files") {
  for (const char* bad : {"", "[]", "{\"order\": 3}", "{\"order\": -1, \"factors\": []}",
                          "{\"order\": 3, \"factors\": [{\"cycles\": [[0, -1, 2]]}]}",
                          "{\"order\": 3, \"factors\": [], \"one_factor\": [[0]]}"}) {
    try {
      parse_decomposition(bad);
      FAIL("accepted: " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Corrupt);
    }
  }
}

TEST_CASE("targets from params") {
  DecompositionFile f;
  f.decomposition.order = 9;
  f.kind = "equipartite";
  f.params = {{"h", 3}, {"u", 3}, {"z", 3}};
  CHECK(std::holds_alternative<EquipartiteTarget>(infer_target(f)));
  f.kind = "cyclic";
  f.params = {{"n", 3}};
  CHECK(std::get<CyclicMultipartiteTarget>(infer_target(f)).labels == 3);
  f.kind = std::nullopt;
  f.decomposition.order = 36;
  CHECK(std::holds_alternative<CompleteMinusMatchingTarget>(infer_target(f)));
  f.kind = "mystery";
  CHECK_THROWS_AS(infer_target(f), Error);
}

TEST_CASE("text and DOT renderings") {
  DecompositionFile f;
  f.decomposition = walecki(5).decomposition();
  const std::string text = to_text(f);
  CHECK(text.find("factor 0 C5") != std::string::npos);
  CHECK(text.find("(0 ") != std::string::npos);
  CHECK(to_dot(f).find("graph decomposition") == 0);
}
