// Copyright 2026 The rcsp authors
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

#include "rcsp/instance.h"

#include <string>
#include <vector>

#include "doctest.h"

namespace rcsp {
namespace {

const char kDiamondText[] =
    "rcsp 1\n"
    "4 5 1 final nowait\n"
    "1 4\n"
    "15\n"
    "1 2 1 10\n"
    "1 3 10 1\n"
    "2 4 1 10\n"
    "3 4 10 1\n"
    "2 3 1 1\n";

const char kChainWindowsText[] =
    "rcsp 1\n"
    "3 2 1 windows nowait\n"
    "1 3\n"
    "0 0\n"
    "0 100\n"
    "0 100\n"
    "1 2 1 5\n"
    "2 3 1 5\n";

TEST_CASE("parse_instance reads a budget-mode file") {
  Instance inst = parse_instance(std::string(kDiamondText));
  CHECK(inst.node_count == 4);
  CHECK(inst.arcs.size() == 5);
  CHECK(inst.resource_count == 1);
  CHECK(inst.kind == ConstraintKind::kFinal);
  CHECK(inst.wait == WaitPolicy::kNoWait);
  CHECK(inst.source == 0);
  CHECK(inst.sink == 3);
  for (int i = 0; i < 4; ++i) {
    CHECK(inst.window_lo[i][0] == 0);
    CHECK(inst.window_hi[i][0] == 15);
  }
  CHECK(inst.arcs[0].tail == 0);
  CHECK(inst.arcs[0].head == 1);
  CHECK(inst.arcs[0].cost == 1);
  CHECK(inst.arcs[0].consumption[0] == 10);
  CHECK(inst.arcs[4].tail == 1);
  CHECK(inst.arcs[4].head == 2);
}

TEST_CASE("parse_instance reads a windows-mode file") {
  Instance inst = parse_instance(std::string(kChainWindowsText));
  CHECK(inst.kind == ConstraintKind::kWindows);
  CHECK(inst.window_lo[0][0] == 0);
  CHECK(inst.window_hi[0][0] == 0);
  CHECK(inst.window_hi[1][0] == 100);
  CHECK(inst.window_hi[2][0] == 100);
}

TEST_CASE("parse_instance skips comments and blank lines") {
  std::string text =
      "# generated fixture\n"
      "rcsp 1\n"
      "\n"
      "2 1 0 final wait  # trailing comment\n"
      "1 2\n"
      "1 2 3.5\n";
  Instance inst = parse_instance(text);
  CHECK(inst.node_count == 2);
  CHECK(inst.resource_count == 0);
  CHECK(inst.arcs.size() == 1);
  CHECK(inst.arcs[0].cost == Rat(7, 2));
}

TEST_CASE("serialize_instance emits the canonical form") {
  Instance inst = parse_instance(std::string(kDiamondText));
  CHECK(serialize_instance(inst) == kDiamondText);
  Instance chain = parse_instance(std::string(kChainWindowsText));
  CHECK(serialize_instance(chain) == kChainWindowsText);
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* text : {kDiamondText, kChainWindowsText}) {
    Instance first = parse_instance(std::string(text));
    Instance second = parse_instance(serialize_instance(first));
    CHECK(serialize_instance(second) == serialize_instance(first));
  }
}

TEST_CASE("parse_instance reports the offending line") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_instance(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("rcsp 2\n1 0 0 final wait\n1 1\n", 1);
  expect_error("rcsp 1\n2 1 0 middle wait\n1 2\n1 2 1\n", 2);
  expect_error("rcsp 1\n2 1 0 final sometimes\n1 2\n1 2 1\n", 2);
  expect_error("rcsp 1\n2 1 0 final wait\n1 3\n1 2 1\n", 3);
  expect_error("rcsp 1\n2 1 0 final wait\n0 2\n1 2 1\n", 3);
  expect_error("rcsp 1\n2 1 1 final wait\n1 2\n-1\n1 2 1 0\n", 4);
  expect_error("rcsp 1\n2 1 1 windows wait\n1 2\n5 3\n0 9\n1 2 1 0\n", 4);
  expect_error("rcsp 1\n2 1 1 final wait\n1 2\n9\n1 2 1 -2\n", 5);
  expect_error("rcsp 1\n2 1 1 final wait\n1 2\n9\n1 2 x 0\n", 5);
  expect_error("rcsp 1\n2 1 0 final wait\n1 2\n1 2 1\n1 2 1\n", 5);
  expect_error("rcsp 1\n2 2 0 final wait\n1 2\n1 2 1\n", 5);
}

TEST_CASE("final_to_windows materializes the budget everywhere") {
  Instance inst = parse_instance(std::string(kDiamondText));
  bool warned = true;
  Instance w = final_to_windows(inst, &warned);
  CHECK(!warned);
  CHECK(w.kind == ConstraintKind::kWindows);
  for (int i = 0; i < 4; ++i) CHECK(w.window_hi[i][0] == 15);
  Instance again = final_to_windows(w, &warned);
  CHECK(warned);
}

TEST_CASE("path helpers follow the arc chain") {
  Instance inst = parse_instance(std::string(kDiamondText));
  Path zigzag{{0, 4, 3}};
  CHECK(path_nodes(inst, zigzag) == std::vector<int>{0, 1, 2, 3});
  CHECK(path_cost(inst, zigzag) == 12);
  CHECK(path_consumption(inst, zigzag, 0) == 12);
  CHECK(path_consumption_vec(inst, zigzag) == std::vector<Rat>{Rat(12)});
  Path top{{0, 2}};
  CHECK(path_cost(inst, top) == 2);
  CHECK(path_consumption(inst, top, 0) == 20);
  CHECK_THROWS_AS(path_nodes(inst, Path{{0, 3}}), ValidationError);
  CHECK_THROWS_AS(path_nodes(inst, Path{{9}}), ValidationError);
}

TEST_CASE("waiting lifts arrivals to the window lower bound") {
  std::string text =
      "rcsp 1\n"
      "3 2 1 windows wait\n"
      "1 3\n"
      "0 0\n"
      "7 10\n"
      "0 20\n"
      "1 2 1 5\n"
      "2 3 1 2\n";
  Instance wait_inst = parse_instance(text);
  Path p{{0, 1}};
  CHECK(path_consumption(wait_inst, p, 0) == 9);  // 5 lifted to 7, plus 2
  CHECK(is_feasible(wait_inst, p));

  std::string nowait_text = text;
  nowait_text.replace(nowait_text.find(" wait"), 5, " nowait");
  Instance nowait_inst = parse_instance(nowait_text);
  CHECK(path_consumption(nowait_inst, p, 0) == 7);  // no lift: 5 then +2
  CHECK(!is_feasible(nowait_inst, p));  // arrives at node 2 before 7
}

TEST_CASE("is_feasible checks upper bounds along the whole path") {
  Instance inst = parse_instance(std::string(kDiamondText));
  CHECK(is_feasible(inst, Path{{0, 4, 3}}));   // consumption 12 <= 15
  CHECK(!is_feasible(inst, Path{{0, 2}}));     // consumption 20 > 15
  CHECK(is_feasible(inst, Path{{1, 3}}));      // consumption 2
}

TEST_CASE("topological_order prefers smaller ids and detects cycles") {
  Instance inst = parse_instance(std::string(kDiamondText));
  REQUIRE(topological_order(inst).has_value());
  CHECK(*topological_order(inst) == std::vector<int>{0, 1, 2, 3});
  CHECK(is_acyclic(inst));

  std::string cyclic =
      "rcsp 1\n"
      "3 3 0 final wait\n"
      "1 3\n"
      "1 2 1\n"
      "2 1 1\n"
      "2 3 1\n";
  Instance loop = parse_instance(cyclic);
  CHECK(!is_acyclic(loop));
  CHECK(!topological_order(loop).has_value());
}

TEST_CASE("validate_instance rejects inconsistent data") {
  Instance inst = parse_instance(std::string(kDiamondText));
  Instance bad = inst;
  bad.arcs[0].consumption[0] = Rat(-1);
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
  bad = inst;
  bad.sink = 9;
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
  bad = inst;
  bad.window_lo[1][0] = Rat(99);
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
  bad = inst;
  bad.arcs[2].head = -1;
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
}

}  // namespace
}  // namespace rcsp
