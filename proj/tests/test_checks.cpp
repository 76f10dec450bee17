// Copyright 2026 The Subcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subcover/checks.hpp"
#include "subcover/instance.hpp"
#include "test_util.hpp"

using namespace subcover;

TEST_CASE("structure checks pass on known-good families") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 15; ++trial) {
    const SetFunctionPtr f = testutil::RandomSubmodular(5, rng);
    CHECK(CheckStructure(*f, StructureProperty::kMonotone).pass);
    CHECK(CheckStructure(*f, StructureProperty::kSubmodular).pass);
  }
}

TEST_CASE("three-element fixture fails the third-order check with its witness") {
  const SetFunctionPtr f = testutil::ThreeElementFixture();
  const auto report = CheckStructure(*f, StructureProperty::kMIncreasing, 3);
  REQUIRE_FALSE(report.pass);
  CHECK(report.witness_a == 0b111);
  CHECK(report.witness_s == 0);
  CHECK(report.value == -1.0);
}

TEST_CASE("coverage oracles are 3-increasing") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);  // n <= 8
    std::vector<std::vector<int>> owned(n);
    std::vector<double> weights;
    for (int it = 0; it < n; ++it) {
      weights.push_back(1.0 + static_cast<double>(rng() % 3));
      for (int j = 0; j < n; ++j) {
        if (rng() % 3 == 0) owned[j].push_back(it);
      }
    }
    WeightedCoverage f(n, owned, weights);
    CHECK(CheckStructure(f, StructureProperty::kMIncreasing, 3).pass);
  }
}

TEST_CASE("monotonicity counterexamples are concrete") {
  ExplicitTable f(2, {0.0, 2.0, 1.0, 1.5});
  const auto report = CheckStructure(f, StructureProperty::kMonotone);
  REQUIRE_FALSE(report.pass);
  // the witness re-evaluates to a negative marginal
  const int j = std::countr_zero(report.witness_a);
  CHECK(f.value(With(report.witness_s, j)) - f.value(report.witness_s) < 0);
}

TEST_CASE("modular functions pass the submodularity check") {
  std::vector<double> values(16);
  for (Mask s = 0; s < 16; ++s) values[s] = 2.0 * Popcount(s);
  ExplicitTable f(4, values);
  CHECK(CheckStructure(f, StructureProperty::kSubmodular).pass);
}

TEST_CASE("ground sets beyond the cap are rejected") {
  std::vector<std::vector<int>> owned(16);
  owned[0] = {0};
  WeightedCoverage f(16, owned, {1.0});
  CHECK_THROWS(CheckStructure(f, StructureProperty::kSubmodular));
}

TEST_CASE("time-monotonicity: the vanishing-requirement stream is rejected") {
  const Instance inst = MakeVanishingStream();
  const auto witness = CheckTimeMonotone(inst.FunctionSequence());
  REQUIRE(witness.has_value());
  CHECK(witness->t == 2);
  CHECK(witness->s == 0);
}

TEST_CASE("prefix sums of monotone functions are time-monotone") {
  GeneratorParams p;
  p.n = 6;
  p.t = 10;
  p.density = 0.4;
  p.seed = 3;
  const Instance inst = Generate("prefix-coverage", p);
  CHECK_FALSE(CheckTimeMonotone(inst.FunctionSequence()).has_value());
}

TEST_CASE("a single-function stream is vacuously time-monotone") {
  const Instance inst = MakeThreeElementFixture();
  CHECK_FALSE(CheckTimeMonotone(inst.FunctionSequence()).has_value());
}
