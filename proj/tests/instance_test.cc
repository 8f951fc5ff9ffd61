// Copyright 2026 The Authors.
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

#include <string>

#include <gtest/gtest.h>

#include "csfm/instance.h"

namespace csfm {
namespace {

std::string Data(const std::string& name) {
  return std::string(CSFM_DATA_DIR) + "/" + name;
}

// Parses `text` and returns the error message, or "" on success.
std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const InstanceError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceTest, LoadsShippedFiles) {
  for (const char* name : {"matroid_coverage.json", "k33_matching.json",
                           "corrupted_table.json", "cut_down_closed.json",
                           "hardness_16.json", "b_matching.json"}) {
    EXPECT_NO_THROW(LoadInstance(Data(name))) << name;
  }
}

TEST(InstanceTest, MatroidCoverage) {
  const Instance instance = LoadInstance(Data("matroid_coverage.json"));
  EXPECT_EQ(instance.ground.size(), 6);
  EXPECT_TRUE(instance.monotone);
  EXPECT_EQ(instance.constraint_backend, "matroid");
  EXPECT_EQ(instance.neighborhood.kind, NeighborhoodSpec::Kind::kPolyhedral);
  EXPECT_EQ(instance.MakeOracle().Evaluate(0b000001), Rational(6));
  EXPECT_TRUE(instance.family.Contains(0b010101));
  EXPECT_FALSE(instance.family.Contains(0b000011));
}

TEST(InstanceTest, K33DefaultsAndExplicitNeighborhood) {
  const Instance instance = LoadInstance(Data("k33_matching.json"));
  const auto n = instance.MakeNeighborhood();
  EXPECT_EQ(n.swap_k(), 2);
  EXPECT_EQ(n.swap_p(), 1);
  EXPECT_EQ(n.claimed_alpha(), 2);
  EXPECT_EQ(instance.family.Enumerate().size(), 34u);
}

TEST(InstanceTest, HardnessInstanceCarriesSecret) {
  const Instance instance = LoadInstance(Data("hardness_16.json"));
  ASSERT_TRUE(instance.hardness.has_value());
  EXPECT_EQ(instance.hardness->beta(), 1);
  EXPECT_EQ(instance.MakeOracle().Evaluate(instance.hardness->secret_mask()), 4);
  const Instance again = ParseInstance(HardnessInstanceJson(*instance.hardness));
  EXPECT_EQ(again.hardness->secret(), instance.hardness->secret());
}

TEST(InstanceTest, MissingConstraintNamesField) {
  try {
    LoadInstance(Data("missing_constraint.json"));
    FAIL() << "expected an error";
  } catch (const InstanceError& e) {
    EXPECT_EQ(std::string(e.what()), "instance.constraint: missing field");
  }
}

TEST(InstanceTest, MalformedJsonReportsPosition) {
  EXPECT_EQ(ErrorOf("{\n  \"ground_set\": [\"a\",\n}"),
            "line 3, column 1: malformed JSON");
}

TEST(InstanceTest, FieldErrors) {
  const std::string head = R"({"ground_set": ["a", "b"], )";
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "modular", "weights": {"a": "1"}},
                               "constraint": {"backend": "unconstrained"}})"),
            "function.weights.b: missing element");
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "modular", "weights": {"a": "1", "b": "x"}},
                               "constraint": {"backend": "unconstrained"}})")
                .rfind("function.weights.b: ", 0),
            0u);
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "magic"},
                               "constraint": {"backend": "unconstrained"}})"),
            "function.kind: unknown function kind \"magic\"");
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "table", "values": ["0", "1"]},
                               "constraint": {"backend": "unconstrained"}})"),
            "function.values: expected 2^n values");
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "modular", "weights": {"a": 1, "b": 2}},
                               "constraint": {"backend": "unconstrained"}, "extra": 1})"),
            "instance.extra: unknown field");
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "modular", "weights": {"a": 1, "b": 2}},
                               "constraint": {"backend": "explicit", "sets": [["a", "c"]]}})"),
            "constraint.sets[0][1]: unknown element \"c\"");
}

TEST(InstanceTest, FlagsAreChecked) {
  const std::string head = R"({"ground_set": ["a", "b"], )";
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "directed_cut",
                                           "arcs": [{"tail": "a", "head": "b"}]},
                               "constraint": {"backend": "unconstrained"},
                               "flags": {"monotone": true}})"),
            "flags.monotone: the function is not monotone");
  EXPECT_EQ(ErrorOf(head + R"("function": {"kind": "modular", "weights": {"a": 1, "b": 2}},
                               "constraint": {"backend": "explicit", "sets": [["a", "b"]]},
                               "flags": {"down_closed": true}})"),
            "flags.down_closed: the family is not down-closed");
}

TEST(InstanceTest, RationalStrings) {
  const Instance instance = ParseInstance(R"({
    "ground_set": ["a"],
    "function": {"kind": "modular", "weights": {"a": "3/4"}, "offset": "1/4"},
    "constraint": {"backend": "unconstrained"}})");
  EXPECT_EQ(instance.MakeOracle().Evaluate(1), 1);
}

TEST(NeighborhoodSpecTest, Parses) {
  EXPECT_EQ(ParseNeighborhoodSpec("polyhedral").kind,
            NeighborhoodSpec::Kind::kPolyhedral);
  const NeighborhoodSpec s = ParseNeighborhoodSpec("swap:3:2");
  EXPECT_EQ(s.kind, NeighborhoodSpec::Kind::kSwap);
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.p, 2);
  EXPECT_THROW(ParseNeighborhoodSpec("swap:0:1"), std::invalid_argument);
  EXPECT_THROW(ParseNeighborhoodSpec("ring"), std::invalid_argument);
}

}  // namespace
}  // namespace csfm
