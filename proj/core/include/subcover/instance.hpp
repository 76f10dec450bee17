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

#ifndef SUBCOVER_INSTANCE_HPP_
#define SUBCOVER_INSTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "subcover/oracle.hpp"

namespace subcover {

/// One arriving event of the stream. Coverage increments accumulate
/// (f^(t) is the sum of all increments since the last snapshot event);
/// explicit tables and partition matroids replace the current function.
struct StreamEvent {
  enum class Kind { kCoverageIncrement, kExplicitTable, kPartitionMatroid };
  Kind kind = Kind::kCoverageIncrement;

  // coverage_increment: owned item ids per element and item weights,
  // both local to this event.
  std::vector<std::vector<int>> sets;
  std::vector<double> item_weights;

  // explicit_table: 2^n values indexed by element bitmask.
  std::vector<double> values;

  // partition_matroid
  std::vector<Mask> parts;
  std::vector<int> capacities;
};

struct Instance {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<double> costs;
  double fmin = 1.0;
  double fmax = 1.0;
  std::vector<StreamEvent> stream;

  int horizon() const { return static_cast<int>(stream.size()); }
  GroundSet ground() const { return GroundSet(n, labels); }
  CostVector cost_vector() const { return CostVector(costs); }

  /// Oracle for f^(t), t in 1..horizon().
  SetFunctionPtr FunctionAt(int t) const;

  /// The full sequence f^(1)..f^(T) (for the time-monotonicity checker).
  std::vector<SetFunctionPtr> FunctionSequence() const;

  /// True when all costs, weights and table values are integers, so the
  /// greedy marginal tolerance can be exactly zero.
  bool IntegerValued() const;

  /// Greedy tolerance per the family: 0 for integer instances, scaled for
  /// floating ones.
  double GreedyTau() const { return IntegerValued() ? 0.0 : 1e-9 * fmin; }
};

std::string ToJson(const Instance& instance);
Instance FromJson(const std::string& text);
void SaveInstance(const Instance& instance, const std::string& path);
Instance LoadInstance(const std::string& path);

struct GeneratorParams {
  int n = 8;
  int t = 15;
  double density = 0.3;
  std::uint64_t seed = 0;
};

/// kind ∈ {set-cover-stream, prefix-coverage, partition-matroid,
/// three-element, vanishing-stream}.
Instance Generate(const std::string& kind, const GeneratorParams& params);

Instance MakeThreeElementFixture();
Instance MakeVanishingStream();

}  // namespace subcover

#endif  // SUBCOVER_INSTANCE_HPP_
